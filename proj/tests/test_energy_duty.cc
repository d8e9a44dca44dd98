#include "vasnet/duty.h"
#include "vasnet/energy.h"

#include "doctest.h"

using namespace vasnet;

namespace
{

RoadsideSensor
sensor(double initial, double remaining)
{
    RoadsideSensor s;
    s.id = NodeId::rss(0);
    s.energy = EnergyLedger::full(initial);
    s.energy.remaining = remaining;
    return s;
}

} // namespace

TEST_CASE("first-order radio costs")
{
    const EnergyModel em;
    CHECK(em.tx_cost(1000, 100) == doctest::Approx(1.05e-3).epsilon(1e-12));
    CHECK(em.tx_cost(0, 100) == 0.0);
    CHECK(em.rx_cost(1000) == doctest::Approx(5e-5).epsilon(1e-12));
    CHECK(em.rx_cost(0) == 0.0);
}

TEST_CASE("charging below the cost clamps to zero and kills the node")
{
    RoadsideSensor s = sensor(2.0, 1e-4);
    const double taken = charge_tx(s, 1000, 100, EnergyModel{});
    CHECK(taken == 1e-4);
    CHECK(s.energy.remaining == 0.0);
    CHECK(s.dead());
    CHECK_THROWS_AS(charge_rx(s, 1000, EnergyModel{}), DeadNode);
}

TEST_CASE("ledger spent sums track deductions")
{
    RoadsideSensor s = sensor(1.0, 1.0);
    const EnergyModel em;
    (void)charge_tx(s, 1000, 500, em);
    (void)charge_rx(s, 1000, em);
    settle(s, 10.0, em);
    s.state = PowerState::Asleep;
    settle(s, 20.0, em);
    CHECK(s.energy.spent_idle == doctest::Approx(10 * em.p_idle));
    CHECK(s.energy.spent_sleep == doctest::Approx(10 * em.p_sleep));
    CHECK(s.energy.initial - s.energy.remaining == doctest::Approx(s.energy.spent_total()).epsilon(1e-12));
}

TEST_CASE("awake probability examples")
{
    const SleepPolicy p;
    RoadsideSensor full = sensor(2.0, 2.0);
    full.prev_state = PowerState::Awake;
    CHECK(awake_probability(full, 1.0, p) == doctest::Approx(0.95));

    RoadsideSensor low = sensor(2.0, 1e-12);
    low.prev_state = PowerState::Asleep;
    CHECK(awake_probability(low, 0.0, p) == doctest::Approx(0.05));

    RoadsideSensor half = sensor(2.0, 1.0);
    half.prev_state = PowerState::Asleep;
    CHECK(awake_probability(half, 1.0, p) == doctest::Approx(0.55));
}

TEST_CASE("awake probability is monotone in energy and importance")
{
    const SleepPolicy p;
    for (const auto prev : {PowerState::Awake, PowerState::Asleep})
    {
        double last_e = 0.0;
        for (int i = 1; i <= 20; ++i)
        {
            RoadsideSensor s = sensor(2.0, 0.1 * i);
            s.prev_state = prev;
            const double v = awake_probability(s, 0.3, p);
            CHECK(v >= last_e);
            last_e = v;
            double last_i = 0.0;
            for (int k = 0; k <= 10; ++k)
            {
                const double w = awake_probability(s, 0.1 * k, p);
                CHECK(w >= last_i);
                last_i = w;
            }
        }
    }
}

TEST_CASE("degenerate policies")
{
    RandomStream rng(4);
    const EnergyModel em;
    RoadsideSensor s = sensor(2.0, 2.0);
    SleepPolicy on = SleepPolicy::always_awake();
    SleepPolicy off;
    off.p_min = off.p_max = 0.0;
    for (int t = 1; t <= 1000; ++t)
    {
        CHECK(epoch_tick(s, 0.0, on, em, t, rng) == PowerState::Awake);
    }
    for (int t = 1001; t <= 2000; ++t)
    {
        CHECK(epoch_tick(s, 1.0, off, em, t, rng) == PowerState::Asleep);
    }
}

TEST_CASE("awake fraction over many ticks")
{
    RandomStream rng(17);
    EnergyModel em;
    em.p_idle = em.p_sleep = 0.0;
    SleepPolicy p;
    p.w_prev = 0.0;
    RoadsideSensor s = sensor(2.0, 1.0);
    const int n = 100000;
    int awake = 0;
    for (int t = 1; t <= n; ++t)
    {
        awake += epoch_tick(s, 1.0, p, em, t, rng) == PowerState::Awake ? 1 : 0;
    }
    CHECK(std::abs(awake / double(n) - 0.55) <= 0.01);
}

TEST_CASE("epoch tick records the outgoing state")
{
    RandomStream rng(1);
    SleepPolicy off;
    off.p_min = off.p_max = 0.0;
    RoadsideSensor s = sensor(2.0, 2.0);
    (void)epoch_tick(s, 0.0, off, EnergyModel{}, 1.0, rng);
    CHECK(s.prev_state == PowerState::Awake);
    (void)epoch_tick(s, 0.0, off, EnergyModel{}, 2.0, rng);
    CHECK(s.prev_state == PowerState::Asleep);
}

TEST_CASE("policy validation")
{
    SleepPolicy p;
    CHECK_NOTHROW(validate_policy(p));
    p.p_min = 0.9;
    p.p_max = 0.1;
    CHECK_THROWS(validate_policy(p));
}
