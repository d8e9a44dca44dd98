#ifndef VASNET_MOBILITY_H
#define VASNET_MOBILITY_H

#include "vasnet/rng.h"
#include "vasnet/topology.h"

#include <stdexcept>

namespace vasnet
{

/// Poisson vehicle arrivals at x = 0 with a uniform speed per vehicle.
struct ArrivalProcess
{
    double rate{0.05}; ///< vehicles/s
    double speed_min{25.0};
    double speed_max{40.0};
};

struct Arrival
{
    double delay{0.0};
    double speed{0.0};
    int lane{0};
};

class DisabledProcess : public std::runtime_error
{
  public:
    DisabledProcess() : std::runtime_error("arrival process disabled (rate = 0)") {}
};

/**
 * Constant-velocity move by dt seconds. A vehicle whose x passes
 * `highway_length` comes back inactive with x left at the exit point reached.
 */
VehicularNode advance_vehicle(VehicularNode v, double dt, double highway_length);

/// Draws (delay, speed, lane) in that order from `rng`.
Arrival next_arrival(RandomStream& rng, const ArrivalProcess& process, int lane_count);

} // namespace vasnet

#endif // VASNET_MOBILITY_H
