#include "vasnet/routing.h"

#include <limits>

namespace vasnet
{

const char*
to_string(DropReason r)
{
    switch (r)
    {
    case DropReason::NoRoute:
        return "noroute";
    case DropReason::LinkLoss:
        return "linkloss";
    case DropReason::QueueOverflow:
        return "overflow";
    }
    return "?";
}

std::optional<NodeId>
next_hop(const Position& current, const BaseStation& dest, std::span<const RoadsideSensor> candidates)
{
    const double here = distance(current, dest.position);
    std::optional<NodeId> best;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates)
    {
        const double d = distance(c.position, dest.position);
        if (!(d < here))
        {
            continue;
        }
        if (d < best_d || (d == best_d && best && c.id < *best))
        {
            best_d = d;
            best = c.id;
        }
    }
    return best;
}

HopPlan
plan_hop(const Network& net, const NodeId& current, const BaseStation& dest)
{
    const auto& node = net.rss.at(current.index);
    if (in_range(node.position, dest.position, node.radio_range))
    {
        return {HopPlan::Kind::DeliverToBs, dest.id};
    }
    std::vector<RoadsideSensor> candidates;
    for (const auto& id : awake_rss_in_range(net, node.position, node.radio_range, current))
    {
        candidates.push_back(net.rss[id.index]);
    }
    if (auto next = next_hop(node.position, dest, candidates))
    {
        return {HopPlan::Kind::Relay, *next};
    }
    return {HopPlan::Kind::NoRoute, {}};
}

DeliveryOutcome
route_to_bs(Network& net, Message& m, const NodeId& entry, const NodeId& dest, const Radio& radio, double now)
{
    if (m.trace.empty() || m.trace.back() != entry)
    {
        m.record_hop(entry);
    }
    const auto& bs = net.bs.at(dest.index);
    NodeId current = entry;
    double t = now;
    for (;;)
    {
        if (!net.rss.at(current.index).awake())
        {
            return Dropped{DropReason::NoRoute};
        }
        const HopPlan plan = plan_hop(net, current, bs);
        if (plan.kind == HopPlan::Kind::NoRoute)
        {
            return Dropped{DropReason::NoRoute};
        }
        const NodeId target[] = {plan.next};
        const auto res = transmit(net, current, m, target, radio);
        t += radio.link.airtime(m.size_bits);
        if (res.received.empty())
        {
            return Dropped{DropReason::LinkLoss};
        }
        m.record_hop(plan.next);
        if (plan.kind == HopPlan::Kind::DeliverToBs)
        {
            return Delivered{t - m.created_at, m.hop_count};
        }
        current = plan.next;
    }
}

} // namespace vasnet
