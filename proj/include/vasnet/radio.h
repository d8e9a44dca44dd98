#ifndef VASNET_RADIO_H
#define VASNET_RADIO_H

#include "vasnet/duty.h"
#include "vasnet/mac.h"
#include "vasnet/message.h"
#include "vasnet/rng.h"
#include "vasnet/topology.h"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace vasnet
{

/// Every node of a scenario, indexed by NodeId::index within each kind.
struct Network
{
    HighwayLayout layout;
    std::vector<RoadsideSensor> rss;
    std::vector<BaseStation> bs;
    std::vector<VehicularNode> vehicles;
    double bs_range{1000.0};

    Position position_of(const NodeId& id) const;
    double range_of(const NodeId& id) const;
};

class SenderUnavailable : public std::runtime_error
{
  public:
    explicit SenderUnavailable(const NodeId& id);
};

/// Everything a transmission needs besides the nodes themselves.
struct Radio
{
    LinkModel link;
    EnergyModel energy;
    LinkDraws draws{0};
};

struct TransmitResult
{
    std::vector<NodeId> received;
    /// Roadside sensors drained by this transmission (sender included).
    std::vector<NodeId> depleted;
};

/**
 * One transmission from `sender`. A geocast sent by a roadside sensor only
 * reaches recipients strictly on the geocast side of the sender; vehicles
 * hand geocasts to a sensor with an ordinary omnidirectional send. Each remaining recipient
 * receives independently with probability 1 - loss; the draw is keyed by
 * (message id, hop index, receiver), with the receiver folded to a constant
 * for base-station-bound unicast so a hop has one draw whoever relays it.
 *
 * The sender (if a roadside sensor) pays the tx cost: distance to the
 * recipient for unicast, its full radio range otherwise. Every awake
 * roadside recipient pays the rx cost whether or not the frame survives.
 * Asleep and dead sensors neither pay nor receive.
 *
 * Throws SenderUnavailable for an asleep/dead/inactive sender and
 * std::invalid_argument for a recipient outside the sender's range.
 */
TransmitResult transmit(Network& net,
                        const NodeId& sender,
                        const Message& m,
                        std::span<const NodeId> recipients,
                        const Radio& radio);

std::uint64_t receiver_code(const NodeId& id);

/// Awake sensors within `range` of `from`, ascending index; `exclude` skipped.
std::vector<NodeId> awake_rss_in_range(const Network& net,
                                       const Position& from,
                                       double range,
                                       std::optional<NodeId> exclude = std::nullopt);

/// Nearest awake sensor within range (ties to the lower index).
std::optional<NodeId> nearest_awake_rss(const Network& net, const Position& from, double range);

/// Nearest base station (ties to the lower index); nullopt when there is none.
std::optional<NodeId> nearest_bs(const Network& net, const Position& from);

bool strictly_on_side(double x, double sender_x, Direction direction);

} // namespace vasnet

#endif // VASNET_RADIO_H
