#include "vasnet/duty.h"

#include <algorithm>
#include <cmath>

namespace vasnet
{

namespace
{

void
mark_if_depleted(RoadsideSensor& node)
{
    if (node.energy.depleted())
    {
        node.state = PowerState::Dead;
    }
}

double
apply(RoadsideSensor& node, ChargeKind kind, double cost)
{
    if (node.dead())
    {
        throw DeadNode();
    }
    const double taken = charge(node.energy, kind, cost);
    mark_if_depleted(node);
    return taken;
}

} // namespace

SleepPolicy
SleepPolicy::always_awake()
{
    SleepPolicy p;
    p.p_min = 1.0;
    p.p_max = 1.0;
    return p;
}

void
validate_policy(const SleepPolicy& policy)
{
    for (double w : {policy.w_energy, policy.w_importance, policy.w_prev})
    {
        if (!(w >= 0.0) || !std::isfinite(w))
        {
            throw std::invalid_argument("sleep weights must be finite and >= 0");
        }
    }
    if (!(policy.p_min >= 0.0 && policy.p_min <= policy.p_max && policy.p_max <= 1.0))
    {
        throw std::invalid_argument("sleep bounds must satisfy 0 <= p_min <= p_max <= 1");
    }
    if (!(policy.epoch > 0.0) || !std::isfinite(policy.epoch))
    {
        throw std::invalid_argument("sleep.epoch must be > 0");
    }
}

double
awake_probability(const RoadsideSensor& node, double recent_importance, const SleepPolicy& policy)
{
    if (node.dead())
    {
        throw DeadNode();
    }
    const double prev = node.prev_state == PowerState::Awake ? 1.0 : 0.0;
    const double raw = policy.w_energy * node.energy.fraction() + policy.w_importance * recent_importance +
                       policy.w_prev * prev;
    return std::clamp(raw, policy.p_min, policy.p_max);
}

void
settle(RoadsideSensor& node, double now, const EnergyModel& em)
{
    const double dt = now - node.last_settled;
    node.last_settled = std::max(node.last_settled, now);
    if (node.dead() || dt <= 0.0)
    {
        return;
    }
    if (node.awake())
    {
        charge(node.energy, ChargeKind::Idle, em.p_idle * dt);
    }
    else
    {
        charge(node.energy, ChargeKind::Sleep, em.p_sleep * dt);
    }
    mark_if_depleted(node);
}

PowerState
epoch_tick(RoadsideSensor& node,
           double recent_importance,
           const SleepPolicy& policy,
           const EnergyModel& em,
           double now,
           RandomStream& rng)
{
    if (node.dead())
    {
        throw DeadNode();
    }
    settle(node, now, em);
    const double u = rng.uniform();
    if (node.dead())
    {
        return node.state;
    }
    const double p = awake_probability(node, recent_importance, policy);
    node.prev_state = node.state;
    node.state = u < p ? PowerState::Awake : PowerState::Asleep;
    return node.state;
}

double
charge_tx(RoadsideSensor& node, double bits, double meters, const EnergyModel& em)
{
    return apply(node, ChargeKind::Tx, em.tx_cost(bits, meters));
}

double
charge_rx(RoadsideSensor& node, double bits, const EnergyModel& em)
{
    return apply(node, ChargeKind::Rx, em.rx_cost(bits));
}

} // namespace vasnet
