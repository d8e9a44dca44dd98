#include "vasnet/mobility.h"

#include "doctest.h"

using namespace vasnet;

namespace
{

VehicularNode
car(double x, double v)
{
    VehicularNode n;
    n.position = {x, 1.75};
    n.velocity = v;
    return n;
}

} // namespace

TEST_CASE("advance_vehicle")
{
    CHECK(advance_vehicle(car(0, 30), 10, 5000).position.x == 300.0);
    const auto gone = advance_vehicle(car(990, 30), 1, 1000);
    CHECK_FALSE(gone.active);
    const auto same = advance_vehicle(car(123, 30), 0, 1000);
    CHECK(same.position == car(123, 30).position);
    CHECK(same.active);
}

TEST_CASE("trajectories are monotone while active")
{
    RandomStream rng(3);
    VehicularNode v = car(0, 31);
    double x = v.position.x;
    while (v.active)
    {
        v = advance_vehicle(v, rng.uniform() * 5.0, 5000);
        CHECK(v.position.x >= x);
        x = v.position.x;
    }
}

TEST_CASE("disabled arrival process")
{
    RandomStream rng(1);
    ArrivalProcess p;
    p.rate = 0;
    CHECK_THROWS_AS(next_arrival(rng, p, 2), DisabledProcess);
}

TEST_CASE("mean inter-arrival delay matches 1/rate")
{
    RandomStream rng(2024);
    ArrivalProcess p;
    p.rate = 0.1;
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
    {
        sum += next_arrival(rng, p, 2).delay;
    }
    CHECK(sum / n == doctest::Approx(10.0).epsilon(0.02));
}

TEST_CASE("degenerate speed range and lane bounds")
{
    RandomStream rng(5);
    ArrivalProcess p;
    p.speed_min = p.speed_max = 30;
    for (int i = 0; i < 1000; ++i)
    {
        const auto a = next_arrival(rng, p, 3);
        CHECK(a.speed == 30.0);
        CHECK(a.lane >= 0);
        CHECK(a.lane < 3);
    }
}
