#include "support/oracles.h"
#include "vasnet/routing.h"

#include "doctest.h"

#include <set>

using namespace vasnet;

namespace
{

RoadsideSensor
node(std::uint32_t i, double x, double y = 8.5)
{
    RoadsideSensor s;
    s.id = NodeId::rss(i);
    s.position = {x, y};
    s.energy = EnergyLedger::full(2.0);
    return s;
}

Network
chain(std::initializer_list<double> xs)
{
    Network net;
    for (const double x : xs)
    {
        net.rss.push_back(node(static_cast<std::uint32_t>(net.rss.size()), x));
    }
    net.bs.push_back({NodeId::bs(0), {0, 0}});
    return net;
}

Message
report(std::uint64_t id)
{
    Message m;
    m.id = id;
    m.cls = MessageClass::BeaconSafety;
    m.destination = ToBaseStation{NodeId::bs(0)};
    return m;
}

Radio
lossless()
{
    Radio r;
    r.link.loss_probability = 0.0;
    return r;
}

} // namespace

TEST_CASE("next hop picks the candidate closest to the base station")
{
    const BaseStation bs{NodeId::bs(0), {0, 0}};
    const std::vector<RoadsideSensor> c{node(0, 400, 0), node(1, 300, 0)};
    CHECK(next_hop({500, 0}, bs, c) == NodeId::rss(1));
    CHECK_FALSE(next_hop({500, 0}, bs, {}).has_value());

    const std::vector<RoadsideSensor> mirrored{node(5, 300, 8.5), node(4, 300, -8.5)};
    CHECK(next_hop({500, 0}, bs, mirrored) == NodeId::rss(4));

    const std::vector<RoadsideSensor> behind{node(0, 600, 0)};
    CHECK_FALSE(next_hop({500, 0}, bs, behind).has_value());
}

TEST_CASE("five-sensor chain delivers in five hops")
{
    Network net = chain({4000, 3100, 2200, 1300, 400});
    Message m = report(1);
    const auto out = route_to_bs(net, m, NodeId::rss(0), NodeId::bs(0), lossless(), 0.0);
    REQUIRE(std::holds_alternative<Delivered>(out));
    CHECK(std::get<Delivered>(out).hops == 5);
    CHECK(m.hop_count == 5);
    CHECK(std::get<Delivered>(out).latency == doctest::Approx(5 * LinkModel{}.airtime(1000)));
}

TEST_CASE("sleeping intermediates leave no route")
{
    Network net = chain({4000, 3100, 2200, 1300, 400});
    for (std::size_t i = 1; i < net.rss.size(); ++i)
    {
        net.rss[i].state = PowerState::Asleep;
    }
    Message m = report(1);
    const auto out = route_to_bs(net, m, NodeId::rss(0), NodeId::bs(0), lossless(), 0.0);
    REQUIRE(std::holds_alternative<Dropped>(out));
    CHECK(std::get<Dropped>(out).reason == DropReason::NoRoute);
}

TEST_CASE("lossy hop reports link loss")
{
    Network net = chain({1500, 600});
    Radio r;
    r.link.loss_probability = 0.999999;
    Message m = report(1);
    const auto out = route_to_bs(net, m, NodeId::rss(0), NodeId::bs(0), r, 0.0);
    REQUIRE(std::holds_alternative<Dropped>(out));
    CHECK(std::get<Dropped>(out).reason == DropReason::LinkLoss);
}

TEST_CASE("routes are loop free and agree with exhaustive search")
{
    std::mt19937_64 gen(123);
    int delivered = 0, no_route = 0;
    for (int trial = 0; trial < 500; ++trial)
    {
        Network net = oracle::random_network(gen, 8);
        const auto entry = static_cast<std::uint32_t>(gen() % net.rss.size());
        const bool reachable = oracle::path_exists(net, entry, net.bs[0]);
        Message m = report(static_cast<std::uint64_t>(trial) + 1);
        const auto out = route_to_bs(net, m, NodeId::rss(entry), NodeId::bs(0), lossless(), 0.0);

        std::set<NodeId> seen(m.trace.begin(), m.trace.end());
        CHECK(seen.size() == m.trace.size());
        CHECK(m.trace.size() <= net.rss.size() + 1);

        if (std::holds_alternative<Delivered>(out))
        {
            ++delivered;
            CHECK(reachable);
        }
        else
        {
            CHECK(std::get<Dropped>(out).reason == DropReason::NoRoute);
            ++no_route;
        }
        if (!reachable)
        {
            CHECK(std::holds_alternative<Dropped>(out));
        }
    }
    CHECK(delivered > 0);
    CHECK(no_route > 0);
}

TEST_CASE("drop reason names")
{
    CHECK(std::string(to_string(DropReason::NoRoute)) == "noroute");
    CHECK(std::string(to_string(DropReason::LinkLoss)) == "linkloss");
    CHECK(std::string(to_string(DropReason::QueueOverflow)) == "overflow");
}
