#include "vasnet/topology.h"

#include <cmath>

namespace vasnet
{

double
HighwayLayout::lane_center(int lane) const
{
    return -half_width() + (lane + 0.5) * lane_width;
}

std::string
to_string(const NodeId& id)
{
    const char* prefix = "VN";
    switch (id.kind)
    {
    case NodeKind::VN:
        break;
    case NodeKind::RSS:
        prefix = "RSS";
        break;
    case NodeKind::BS:
        prefix = "BS";
        break;
    }
    return std::string(prefix) + std::to_string(id.index);
}

const char*
to_string(PowerState s)
{
    switch (s)
    {
    case PowerState::Awake:
        return "awake";
    case PowerState::Asleep:
        return "asleep";
    case PowerState::Dead:
        return "dead";
    }
    return "?";
}

void
validate_layout(const HighwayLayout& layout)
{
    if (!(layout.length > 0.0) || !std::isfinite(layout.length))
    {
        throw std::invalid_argument("layout.length must be > 0");
    }
    if (!(layout.rss_spacing > 0.0) || !std::isfinite(layout.rss_spacing))
    {
        throw std::invalid_argument("layout.rss_spacing must be > 0");
    }
    if (layout.lane_count < 1)
    {
        throw std::invalid_argument("layout.lane_count must be >= 1");
    }
    if (!(layout.lane_width > 0.0))
    {
        throw std::invalid_argument("layout.lane_width must be > 0");
    }
    if (!(layout.rss_setback >= 0.0))
    {
        throw std::invalid_argument("layout.rss_setback must be >= 0");
    }
}

Topology
build_topology(const HighwayLayout& layout,
               std::span<const Position> bs_positions,
               const RssDefaults& defaults)
{
    validate_layout(layout);
    if (layout.length < layout.rss_spacing)
    {
        throw EmptyTopology("highway shorter than one rss spacing");
    }

    // k * spacing <= length, tolerant of representation error in the ratio.
    const auto per_side =
        static_cast<std::uint32_t>(std::floor(layout.length / layout.rss_spacing * (1.0 + 1e-12))) + 1;
    const double offset = layout.rss_offset();

    Topology t;
    t.rss.reserve(per_side * (layout.rss_both_sides ? 2 : 1));
    auto place = [&](double x, double y) {
        RoadsideSensor s;
        s.id = NodeId::rss(static_cast<std::uint32_t>(t.rss.size()));
        s.position = {x, y};
        s.energy = EnergyLedger::full(defaults.initial_energy);
        s.radio_range = defaults.radio_range;
        t.rss.push_back(s);
    };
    for (std::uint32_t k = 0; k < per_side; ++k)
    {
        const double x = std::min(k * layout.rss_spacing, layout.length);
        if (layout.rss_both_sides)
        {
            place(x, -offset);
        }
        place(x, offset);
    }

    t.bs.reserve(bs_positions.size());
    for (const auto& p : bs_positions)
    {
        t.bs.push_back({NodeId::bs(static_cast<std::uint32_t>(t.bs.size())), p});
    }
    return t;
}

} // namespace vasnet
