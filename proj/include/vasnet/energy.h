#ifndef VASNET_ENERGY_H
#define VASNET_ENERGY_H

namespace vasnet
{

/**
 * First-order radio model. Transmitting b bits over d meters costs
 * e_elec*b + eps_amp*b*d^2, receiving costs e_elec*b. Idle and sleep draws
 * are charged per second spent in the respective power state.
 */
struct EnergyModel
{
    double e_elec{50e-9};   ///< J/bit
    double eps_amp{100e-12}; ///< J/bit/m^2
    double p_idle{1e-3};    ///< W
    double p_sleep{1e-6};   ///< W

    double tx_cost(double bits, double meters) const;
    double rx_cost(double bits) const;
};

/**
 * Remaining energy of a roadside sensor together with the running totals of
 * every charge applied to it. The totals record what was actually deducted,
 * so initial - remaining == tx + rx + idle + sleep holds after clamping.
 */
struct EnergyLedger
{
    double initial{0.0};
    double remaining{0.0};
    double spent_tx{0.0};
    double spent_rx{0.0};
    double spent_idle{0.0};
    double spent_sleep{0.0};

    static EnergyLedger full(double joules);

    bool depleted() const { return remaining <= 0.0; }
    double spent_total() const { return spent_tx + spent_rx + spent_idle + spent_sleep; }
    double fraction() const { return initial > 0.0 ? remaining / initial : 0.0; }
};

enum class ChargeKind
{
    Tx,
    Rx,
    Idle,
    Sleep,
};

/// Deducts up to `cost` joules, clamping at zero. Returns the amount deducted.
double charge(EnergyLedger& ledger, ChargeKind kind, double cost);

} // namespace vasnet

#endif // VASNET_ENERGY_H
