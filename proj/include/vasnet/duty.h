#ifndef VASNET_DUTY_H
#define VASNET_DUTY_H

#include "vasnet/energy.h"
#include "vasnet/rng.h"
#include "vasnet/topology.h"

#include <stdexcept>

namespace vasnet
{

/**
 * Probabilistic sleep scheduling for roadside sensors. Once per epoch each
 * live sensor stays (or becomes) awake with probability
 *
 *   clamp(w_energy * energy_fraction + w_importance * recent_importance
 *         + w_prev * [previous state was Awake], p_min, p_max)
 *
 * decided against a fresh uniform draw.
 */
struct SleepPolicy
{
    double w_energy{0.5};
    double w_importance{0.3};
    double w_prev{0.2};
    double p_min{0.05};
    double p_max{0.95};
    double epoch{1.0};

    static SleepPolicy always_awake();
};

void validate_policy(const SleepPolicy& policy);

class DeadNode : public std::logic_error
{
  public:
    DeadNode() : std::logic_error("operation on a dead roadside sensor") {}
};

double awake_probability(const RoadsideSensor& node, double recent_importance, const SleepPolicy& policy);

/**
 * Charges the idle or sleep draw accumulated since node.last_settled and
 * moves last_settled to `now`. A node drained here becomes Dead.
 */
void settle(RoadsideSensor& node, double now, const EnergyModel& em);

/**
 * Settles the elapsed epoch, then draws u ~ U[0,1) and makes the node Awake
 * iff u < awake_probability(...). prev_state takes the outgoing state.
 */
PowerState epoch_tick(RoadsideSensor& node,
                      double recent_importance,
                      const SleepPolicy& policy,
                      const EnergyModel& em,
                      double now,
                      RandomStream& rng);

/// Both return the energy actually deducted; depletion makes the node Dead.
double charge_tx(RoadsideSensor& node, double bits, double meters, const EnergyModel& em);
double charge_rx(RoadsideSensor& node, double bits, const EnergyModel& em);

} // namespace vasnet

#endif // VASNET_DUTY_H
