#include "support/worlds.h"
#include "vasnet/engine.h"

#include "doctest.h"

using namespace vasnet;
using worlds::car;

namespace
{

const PacketLedger::Fate&
fate(const Simulation& sim, std::uint64_t id)
{
    return sim.ledger().fate(id);
}

} // namespace

TEST_CASE("speed threshold is strict")
{
    VehicularNode v;
    v.authorized_speed = 33.3;
    v.velocity = 35.0;
    CHECK(violates_speed(v));
    v.velocity = 33.3;
    CHECK_FALSE(violates_speed(v));
}

TEST_CASE("payload classes")
{
    CHECK(class_for(AccidentNotice{}) == MessageClass::EventSafety);
    CHECK(class_for(SpeedViolationReport{}) == MessageClass::BeaconSafety);
    CHECK(class_for(Beacon{}) == MessageClass::BeaconSafety);
    CHECK(class_for(TheftQuery{}) == MessageClass::Comfort);
    CHECK(class_for(TheftReply{}) == MessageClass::Comfort);
    CHECK(class_for(ComfortData{}) == MessageClass::Comfort);

    VehicularNode v;
    const AppParams app;
    const auto acc = make_accident(1, v, LocalizationFailed{}, NodeId::bs(0), 0.0, app);
    CHECK(acc.importance == 1.0);
    CHECK(acc.cls == MessageClass::EventSafety);
    CHECK(make_beacon(2, v, 0.0, app).cls == MessageClass::BeaconSafety);
}

TEST_CASE("warning region")
{
    const Geocast g = warning_region(3000, 3, 250);
    CHECK(g.direction == Direction::Upstream);
    CHECK(g.region_lo == 2250);
    CHECK(g.region_hi == 3000);
    CHECK(g.relays_left == 3);
}

TEST_CASE("over-speed vehicle yields one delivered, well-localized report")
{
    ScenarioConfig c = worlds::quiet_highway();
    c.vehicles.preplaced = {car(2010, 40)};
    Simulation sim(c);
    sim.run();
    REQUIRE(sim.speed_reports().size() == 1);
    const auto& rep = sim.speed_reports()[0];
    CHECK(fate(sim, rep.msg_id).state == PacketLedger::State::Delivered);
    const auto* loc = std::get_if<LocalizationResult>(&rep.localization);
    REQUIRE(loc);
    CHECK(distance(loc->estimate, rep.true_position) < 1e-6);
    CHECK(sim.ledger().generated() == 1);
}

TEST_CASE("vehicle at the limit sends nothing")
{
    ScenarioConfig c = worlds::quiet_highway();
    c.vehicles.preplaced = {car(2010, 33.3)};
    Simulation sim(c);
    sim.run();
    CHECK(sim.speed_reports().empty());
    CHECK(sim.ledger().generated() == 0);
}

TEST_CASE("report with every sensor asleep is dropped for lack of a route")
{
    ScenarioConfig c = worlds::quiet_highway(200);
    c.sleep.p_min = c.sleep.p_max = 0.0;
    c.arrivals.rate = 0.01;
    c.arrivals.speed_min = c.arrivals.speed_max = 40;
    c.seed = 3;
    Simulation sim(c);
    sim.run();
    REQUIRE(sim.arrivals() >= 1);
    REQUIRE(sim.arrival_times()[0] > c.sleep.epoch);
    REQUIRE(!sim.speed_reports().empty());
    const auto& f = fate(sim, sim.speed_reports()[0].msg_id);
    CHECK(f.state == PacketLedger::State::Dropped);
    CHECK(f.reason == DropReason::NoRoute);
}

TEST_CASE("accident warns exactly the vehicles in the upstream ribbon")
{
    ScenarioConfig c = worlds::quiet_highway();
    c.vehicles.preplaced = {car(3000, 30), car(2100, 30), car(2300, 30, 1), car(2500, 30),
                            car(2800, 30, 1), car(2999, 30), car(3100, 30), car(1000, 30)};
    c.app.accidents = {{5.0, 0u}};
    Simulation sim(c);
    sim.run();
    REQUIRE(sim.accidents().size() == 1);
    const auto& acc = sim.accidents()[0];
    CHECK(fate(sim, acc.msg_id).state == PacketLedger::State::Delivered);
    CHECK(acc.accident_position.x == doctest::Approx(3150));

    // Geometric enumeration at warning time.
    std::set<NodeId> expected;
    for (std::uint32_t i = 0; i < c.vehicles.preplaced.size(); ++i)
    {
        const double x = c.vehicles.preplaced[i].x + 30 * 5.0;
        if (x >= 3150 - 3 * 250 && x < 3150)
        {
            expected.insert(NodeId::vn(i));
        }
    }
    std::set<NodeId> warned;
    for (const auto& [id, w] : acc.warned)
    {
        warned.insert(id);
        CHECK(distance(w.vehicle_position, w.relay_position) <= c.link.default_range);
        CHECK(std::find(acc.relays.begin(), acc.relays.end(), w.relay) != acc.relays.end());
    }
    CHECK(warned == expected);
    CHECK(expected.size() == 4);
    CHECK(acc.relays.size() <= 3);
}

TEST_CASE("accident with nobody behind")
{
    ScenarioConfig c = worlds::quiet_highway();
    c.vehicles.preplaced = {car(3000, 30), car(3500, 30)};
    c.app.accidents = {{5.0, 0u}};
    Simulation sim(c);
    sim.run();
    REQUIRE(sim.accidents().size() == 1);
    CHECK(sim.accidents()[0].warned.empty());
    CHECK(fate(sim, sim.accidents()[0].msg_id).state == PacketLedger::State::Delivered);
    CHECK(sim.ledger().generated() == 1);
    CHECK(sim.ledger().delivered() == 1);
}

TEST_CASE("isolated accident vehicle")
{
    ScenarioConfig c = worlds::quiet_highway();
    c.vehicles.radio_range = 1.0;
    c.vehicles.preplaced = {car(3000, 30), car(2800, 30)};
    c.app.accidents = {{5.0, 0u}};
    Simulation sim(c);
    sim.run();
    REQUIRE(sim.accidents().size() == 1);
    const auto& f = fate(sim, sim.accidents()[0].msg_id);
    CHECK(f.state == PacketLedger::State::Dropped);
    CHECK(f.reason == DropReason::NoRoute);
    CHECK(sim.accidents()[0].warned.empty());
}

TEST_CASE("theft query finds the stolen vehicle")
{
    ScenarioConfig c = worlds::quiet_highway();
    c.vehicles.preplaced = {car(1200, 30, 0, "STOLEN1"), car(3000, 30)};
    c.app.thefts = {{10.0, 1u, "STOLEN1"}};
    Simulation sim(c);
    sim.run();
    REQUIRE(sim.thefts().size() == 1);
    const auto& t = sim.thefts()[0];
    REQUIRE(t.first_reply.has_value());
    CHECK(t.first_reply->vehicle == NodeId::vn(0));
    CHECK(t.first_reply->rss_position == sim.network().rss[t.first_reply->relay_rss.index].position);
    CHECK(t.replied_vehicles.size() == 1);
    CHECK(t.forwards <= static_cast<int>(sim.network().rss.size()));
    CHECK(fate(sim, t.first_reply->reply_id).state == PacketLedger::State::Delivered);
}

TEST_CASE("theft query with no match gets no reply")
{
    ScenarioConfig c = worlds::quiet_highway();
    c.vehicles.preplaced = {car(1200, 30), car(3000, 30)};
    c.app.thefts = {{10.0, 0u, "NOBODY"}};
    Simulation sim(c);
    sim.run();
    REQUIRE(sim.thefts().size() == 1);
    CHECK_FALSE(sim.thefts()[0].first_reply.has_value());
    CHECK(sim.thefts()[0].replied_vehicles.empty());
    CHECK(sim.thefts()[0].forwards <= static_cast<int>(sim.network().rss.size()));
    CHECK(sim.ledger().generated() == 1);
}
