#ifndef VASNET_MESSAGE_H
#define VASNET_MESSAGE_H

#include "vasnet/geometry.h"
#include "vasnet/topology.h"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vasnet
{

/// Service classes in descending priority.
enum class MessageClass : std::uint8_t
{
    EventSafety = 0,
    BeaconSafety = 1,
    Comfort = 2,
};

inline constexpr int kClassCount = 3;

/// Lower rank is served first.
constexpr int
rank(MessageClass c)
{
    return static_cast<int>(c);
}

/// True if `a` is served strictly before `b`.
constexpr bool
outranks(MessageClass a, MessageClass b)
{
    return rank(a) < rank(b);
}

const char* to_string(MessageClass c);

/// Position estimate attached to a report; nullopt means Unavailable.
struct ReportedPosition
{
    Position estimate;
    double residual{0.0};
    int anchors_used{0};
};

struct SpeedViolationReport
{
    NodeId vehicle;
    double measured_speed{0.0};
    double authorized_speed{0.0};
    std::optional<ReportedPosition> position;
    double timestamp{0.0};
};

struct AccidentNotice
{
    NodeId vehicle;
    std::optional<ReportedPosition> position;
    double timestamp{0.0};
};

struct TheftQuery
{
    std::string plate;
    NodeId issuing_bs;
};

struct TheftReply
{
    std::string plate;
    std::uint64_t query_id{0};
    NodeId vehicle;
    std::optional<NodeId> relay_rss;
    std::optional<Position> rss_position; ///< set by the first RSS to relay it
};

struct Beacon
{
    Position position;
    double speed{0.0};
};

struct ComfortData
{
};

using Payload = std::variant<SpeedViolationReport, AccidentNotice, TheftQuery, TheftReply, Beacon, ComfortData>;

/// Class each payload kind travels in.
MessageClass class_for(const Payload& payload);

const char* payload_name(const Payload& payload);

enum class Direction : std::uint8_t
{
    Upstream,   ///< towards -x, where trailing traffic is
    Downstream, ///< towards +x
};

struct ToBaseStation
{
    NodeId bs;
};

struct BroadcastDest
{
};

/**
 * Directional half-disk delivery. Vehicles inside [region_lo, region_hi) are
 * the intended audience; relays_left bounds the RSS relay chain.
 */
struct Geocast
{
    Direction direction{Direction::Upstream};
    double region_lo{0.0};
    double region_hi{0.0};
    int relays_left{0};
};

using Destination = std::variant<ToBaseStation, BroadcastDest, Geocast>;

struct Message
{
    std::uint64_t id{0};
    MessageClass cls{MessageClass::Comfort};
    Payload payload{ComfortData{}};
    NodeId origin;
    Destination destination{BroadcastDest{}};
    std::uint32_t size_bits{1000};
    double importance{0.0};
    double created_at{0.0};
    int hop_count{0};
    std::vector<NodeId> trace;
    int channel{-1};
    /// The copy whose fate decides the packet ledger outcome for `id`.
    bool ledger_copy{true};

    bool is_unicast() const { return std::holds_alternative<ToBaseStation>(destination); }

    /// Appends `hop` to the trace, keeping hop_count == |trace| - 1.
    void record_hop(const NodeId& hop);
};

} // namespace vasnet

#endif // VASNET_MESSAGE_H
