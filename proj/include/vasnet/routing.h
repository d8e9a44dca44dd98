#ifndef VASNET_ROUTING_H
#define VASNET_ROUTING_H

#include "vasnet/radio.h"

#include <optional>
#include <span>
#include <variant>

namespace vasnet
{

enum class DropReason : std::uint8_t
{
    NoRoute,
    LinkLoss,
    QueueOverflow,
};

const char* to_string(DropReason r);

struct Delivered
{
    double latency{0.0};
    int hops{0};
};

struct Dropped
{
    DropReason reason{DropReason::NoRoute};
};

using DeliveryOutcome = std::variant<Delivered, Dropped>;

/**
 * Greedy geographic forwarding: the candidate closest to `dest` among those
 * strictly closer to it than `current`, lower index on ties. Candidates are
 * assumed awake and in range; nullopt means no candidate makes progress.
 */
std::optional<NodeId> next_hop(const Position& current,
                               const BaseStation& dest,
                               std::span<const RoadsideSensor> candidates);

struct HopPlan
{
    enum class Kind
    {
        DeliverToBs,
        Relay,
        NoRoute,
    };
    Kind kind{Kind::NoRoute};
    NodeId next;
};

/// Delivers directly when the base station is in range, else picks next_hop.
HopPlan plan_hop(const Network& net, const NodeId& current, const BaseStation& dest);

/**
 * Walks `m` from the awake sensor `entry` to `dest`, one plan_hop + transmit
 * per step, with no queueing. Each hop takes one airtime; latency is
 * measured from m.created_at with the walk starting at `now`.
 */
DeliveryOutcome route_to_bs(Network& net,
                            Message& m,
                            const NodeId& entry,
                            const NodeId& dest,
                            const Radio& radio,
                            double now);

} // namespace vasnet

#endif // VASNET_ROUTING_H
