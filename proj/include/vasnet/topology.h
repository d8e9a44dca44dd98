#ifndef VASNET_TOPOLOGY_H
#define VASNET_TOPOLOGY_H

#include "vasnet/energy.h"
#include "vasnet/geometry.h"

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vasnet
{

/**
 * Straight highway along +x. Lanes are centered on y = 0; roadside sensors
 * sit rss_setback meters beyond the road edge.
 */
struct HighwayLayout
{
    double length{5000.0};
    int lane_count{2};
    double lane_width{3.5};
    double rss_spacing{250.0};
    double rss_setback{5.0};
    bool rss_both_sides{true};

    double half_width() const { return 0.5 * lane_count * lane_width; }
    double rss_offset() const { return half_width() + rss_setback; }
    /// Lateral center of lane `lane` (0-based, from -y to +y).
    double lane_center(int lane) const;
};

enum class NodeKind : std::uint8_t
{
    VN,
    RSS,
    BS,
};

struct NodeId
{
    NodeKind kind{NodeKind::VN};
    std::uint32_t index{0};

    auto operator<=>(const NodeId&) const = default;

    static NodeId vn(std::uint32_t i) { return {NodeKind::VN, i}; }
    static NodeId rss(std::uint32_t i) { return {NodeKind::RSS, i}; }
    static NodeId bs(std::uint32_t i) { return {NodeKind::BS, i}; }
};

std::string to_string(const NodeId& id);

struct BaseStation
{
    NodeId id;
    Position position;
};

struct VehicularNode
{
    NodeId id;
    Position position;
    double velocity{0.0};         ///< m/s, +x is the travel direction
    double authorized_speed{33.3}; ///< m/s
    double radio_range{1000.0};
    bool active{true};
    double last_update{0.0};      ///< time at which `position` was valid
    std::string plate;
};

enum class PowerState : std::uint8_t
{
    Awake,
    Asleep,
    Dead,
};

const char* to_string(PowerState s);

struct RoadsideSensor
{
    NodeId id;
    Position position;
    EnergyLedger energy;
    PowerState state{PowerState::Awake};
    PowerState prev_state{PowerState::Awake}; ///< Awake or Asleep only
    double radio_range{1000.0};
    double last_settled{0.0}; ///< idle/sleep draw has been charged up to here

    bool awake() const { return state == PowerState::Awake; }
    bool dead() const { return state == PowerState::Dead; }
};

class EmptyTopology : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct RssDefaults
{
    double initial_energy{2.0};
    double radio_range{1000.0};
};

struct Topology
{
    std::vector<RoadsideSensor> rss;
    std::vector<BaseStation> bs;
};

/**
 * Places sensors at x = 0, s, 2s, ... <= length on one (+y) or both sides,
 * ordered by x and then side (-y first). Throws EmptyTopology when fewer than
 * two positions fit on a side, std::invalid_argument on an invalid layout.
 */
Topology build_topology(const HighwayLayout& layout,
                        std::span<const Position> bs_positions,
                        const RssDefaults& defaults = {});

void validate_layout(const HighwayLayout& layout);

} // namespace vasnet

#endif // VASNET_TOPOLOGY_H
