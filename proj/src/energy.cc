#include "vasnet/energy.h"

#include <algorithm>

namespace vasnet
{

double
EnergyModel::tx_cost(double bits, double meters) const
{
    return e_elec * bits + eps_amp * bits * meters * meters;
}

double
EnergyModel::rx_cost(double bits) const
{
    return e_elec * bits;
}

EnergyLedger
EnergyLedger::full(double joules)
{
    EnergyLedger l;
    l.initial = joules;
    l.remaining = joules;
    return l;
}

double
charge(EnergyLedger& ledger, ChargeKind kind, double cost)
{
    const double taken = std::clamp(cost, 0.0, ledger.remaining);
    // Exact zero once the cost covers what is left, so depleted() is reliable.
    ledger.remaining = taken >= ledger.remaining ? 0.0 : ledger.remaining - taken;
    switch (kind)
    {
    case ChargeKind::Tx:
        ledger.spent_tx += taken;
        break;
    case ChargeKind::Rx:
        ledger.spent_rx += taken;
        break;
    case ChargeKind::Idle:
        ledger.spent_idle += taken;
        break;
    case ChargeKind::Sleep:
        ledger.spent_sleep += taken;
        break;
    }
    return taken;
}

} // namespace vasnet
