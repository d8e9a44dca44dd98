#include "vasnet/radio.h"

#include <algorithm>
#include <limits>

namespace vasnet
{

Position
Network::position_of(const NodeId& id) const
{
    switch (id.kind)
    {
    case NodeKind::VN:
        return vehicles.at(id.index).position;
    case NodeKind::RSS:
        return rss.at(id.index).position;
    case NodeKind::BS:
        return bs.at(id.index).position;
    }
    return {};
}

double
Network::range_of(const NodeId& id) const
{
    switch (id.kind)
    {
    case NodeKind::VN:
        return vehicles.at(id.index).radio_range;
    case NodeKind::RSS:
        return rss.at(id.index).radio_range;
    case NodeKind::BS:
        return bs_range;
    }
    return 0.0;
}

SenderUnavailable::SenderUnavailable(const NodeId& id)
    : std::runtime_error("sender " + to_string(id) + " is not available")
{
}

std::uint64_t
receiver_code(const NodeId& id)
{
    return ((static_cast<std::uint64_t>(id.kind) + 1) << 32) | id.index;
}

bool
strictly_on_side(double x, double sender_x, Direction direction)
{
    return direction == Direction::Upstream ? x < sender_x : x > sender_x;
}

TransmitResult
transmit(Network& net, const NodeId& sender, const Message& m, std::span<const NodeId> recipients, const Radio& radio)
{
    switch (sender.kind)
    {
    case NodeKind::RSS:
        if (!net.rss.at(sender.index).awake())
        {
            throw SenderUnavailable(sender);
        }
        break;
    case NodeKind::VN:
        if (!net.vehicles.at(sender.index).active)
        {
            throw SenderUnavailable(sender);
        }
        break;
    case NodeKind::BS:
        break;
    }

    const Position from = net.position_of(sender);
    const double range = net.range_of(sender);
    // Directional (geocast) sends come from the roadside antenna only.
    const Geocast* geo = sender.kind == NodeKind::RSS ? std::get_if<Geocast>(&m.destination) : nullptr;
    const bool unicast = m.is_unicast();

    std::vector<NodeId> targets;
    targets.reserve(recipients.size());
    double farthest = 0.0;
    for (const auto& r : recipients)
    {
        const Position p = net.position_of(r);
        const double d = distance(from, p);
        if (d > range)
        {
            throw std::invalid_argument("recipient " + to_string(r) + " outside range of " + to_string(sender));
        }
        if (geo && !strictly_on_side(p.x, from.x, geo->direction))
        {
            continue;
        }
        farthest = std::max(farthest, d);
        targets.push_back(r);
    }

    TransmitResult result;
    if (sender.kind == NodeKind::RSS)
    {
        auto& node = net.rss[sender.index];
        charge_tx(node, m.size_bits, unicast ? farthest : range, radio.energy);
        if (node.dead())
        {
            result.depleted.push_back(sender);
        }
    }

    const auto hop = static_cast<std::uint32_t>(m.hop_count);
    for (const auto& r : targets)
    {
        if (r == sender)
        {
            continue;
        }
        if (r.kind == NodeKind::RSS)
        {
            auto& node = net.rss[r.index];
            if (!node.awake())
            {
                continue;
            }
            charge_rx(node, m.size_bits, radio.energy);
            if (node.dead())
            {
                result.depleted.push_back(r);
                continue;
            }
        }
        else if (r.kind == NodeKind::VN && !net.vehicles[r.index].active)
        {
            continue;
        }
        const double u = radio.draws.uniform(m.id, hop, unicast ? 0 : receiver_code(r));
        if (u >= radio.link.loss_probability)
        {
            result.received.push_back(r);
        }
    }
    return result;
}

std::vector<NodeId>
awake_rss_in_range(const Network& net, const Position& from, double range, std::optional<NodeId> exclude)
{
    std::vector<NodeId> out;
    for (const auto& s : net.rss)
    {
        if (s.awake() && s.id != exclude && in_range(from, s.position, range))
        {
            out.push_back(s.id);
        }
    }
    return out;
}

std::optional<NodeId>
nearest_awake_rss(const Network& net, const Position& from, double range)
{
    std::optional<NodeId> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& s : net.rss)
    {
        if (!s.awake())
        {
            continue;
        }
        const double d = distance(from, s.position);
        if (d <= range && d < best_d)
        {
            best_d = d;
            best = s.id;
        }
    }
    return best;
}

std::optional<NodeId>
nearest_bs(const Network& net, const Position& from)
{
    std::optional<NodeId> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& b : net.bs)
    {
        const double d = distance(from, b.position);
        if (d < best_d)
        {
            best_d = d;
            best = b.id;
        }
    }
    return best;
}

} // namespace vasnet
