#include "vasnet/mobility.h"

namespace vasnet
{

VehicularNode
advance_vehicle(VehicularNode v, double dt, double highway_length)
{
    if (!v.active || dt <= 0.0)
    {
        return v;
    }
    v.position.x += v.velocity * dt;
    v.last_update += dt;
    if (v.position.x > highway_length)
    {
        v.active = false;
    }
    return v;
}

Arrival
next_arrival(RandomStream& rng, const ArrivalProcess& process, int lane_count)
{
    if (!(process.rate > 0.0))
    {
        throw DisabledProcess();
    }
    Arrival a;
    a.delay = rng.exponential(process.rate);
    a.speed = process.speed_min + (process.speed_max - process.speed_min) * rng.uniform();
    a.lane = static_cast<int>(rng.below(static_cast<std::uint64_t>(lane_count)));
    return a;
}

} // namespace vasnet
