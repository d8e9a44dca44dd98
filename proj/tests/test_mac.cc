#include "vasnet/mac.h"

#include "doctest.h"

#include <array>
#include <deque>
#include <random>

using namespace vasnet;

namespace
{

Message
msg(std::uint64_t id, MessageClass cls)
{
    Message m;
    m.id = id;
    m.cls = cls;
    return m;
}

constexpr MessageClass kClasses[] = {MessageClass::EventSafety, MessageClass::BeaconSafety, MessageClass::Comfort};

// Reference: one list per class, scanned in priority order.
struct ThreeListOracle
{
    std::array<std::deque<std::uint64_t>, 3> lists;
    std::size_t capacity;

    bool enqueue(std::uint64_t id, MessageClass c)
    {
        auto& l = lists[static_cast<int>(c)];
        if (l.size() >= capacity)
        {
            return false;
        }
        l.push_back(id);
        return true;
    }

    std::optional<std::uint64_t> dequeue()
    {
        for (auto& l : lists)
        {
            if (!l.empty())
            {
                const auto id = l.front();
                l.pop_front();
                return id;
            }
        }
        return std::nullopt;
    }
};

} // namespace

TEST_CASE("enqueue examples")
{
    PriorityQueue q(2);
    CHECK(q.enqueue(msg(1, MessageClass::Comfort)) == Admission::Accepted);
    CHECK(q.size() == 1);
    CHECK(q.lane_size(MessageClass::Comfort) == 1);
    CHECK(q.enqueue(msg(2, MessageClass::EventSafety)) == Admission::Accepted);
    CHECK(q.lane_size(MessageClass::EventSafety) == 1);
    CHECK(q.lane_size(MessageClass::Comfort) == 1);
    CHECK(q.enqueue(msg(3, MessageClass::Comfort)) == Admission::Accepted);
    CHECK(q.enqueue(msg(4, MessageClass::Comfort)) == Admission::LaneFull);
    CHECK(q.size() == 3);
}

TEST_CASE("dequeue examples")
{
    PriorityQueue q;
    CHECK_FALSE(q.dequeue().has_value());
    REQUIRE(q.enqueue(msg(1, MessageClass::Comfort)) == Admission::Accepted);
    REQUIRE(q.enqueue(msg(2, MessageClass::EventSafety)) == Admission::Accepted);
    CHECK(q.dequeue()->id == 2);

    PriorityQueue b;
    REQUIRE(b.enqueue(msg(10, MessageClass::BeaconSafety)) == Admission::Accepted);
    REQUIRE(b.enqueue(msg(11, MessageClass::BeaconSafety)) == Admission::Accepted);
    CHECK(b.dequeue()->id == 10);
    CHECK(b.dequeue()->id == 11);
    CHECK(b.empty());
}

TEST_CASE("priority queue matches the three-list oracle")
{
    std::mt19937_64 gen(99);
    PriorityQueue q(8);
    ThreeListOracle oracle{{}, 8};
    std::uint64_t next_id = 1;
    std::size_t accepted = 0, rejected = 0, dequeued = 0;
    for (int step = 0; step < 100000; ++step)
    {
        if (gen() % 5 < 3)
        {
            const auto c = kClasses[gen() % 3];
            const auto id = next_id++;
            const bool ok = oracle.enqueue(id, c);
            const Admission a = q.enqueue(msg(id, c));
            REQUIRE((a == Admission::Accepted) == ok);
            (ok ? accepted : rejected)++;
        }
        else
        {
            std::optional<MessageClass> higher;
            for (const auto c : kClasses)
            {
                if (q.lane_size(c) > 0)
                {
                    higher = c;
                    break;
                }
            }
            const auto want = oracle.dequeue();
            const auto got = q.dequeue();
            REQUIRE(want.has_value() == got.has_value());
            if (got)
            {
                REQUIRE(got->id == *want);
                REQUIRE(got->cls == *higher);
                ++dequeued;
            }
        }
    }
    // Conservation: each accepted message is dequeued or still queued.
    CHECK(accepted == dequeued + q.size());
    CHECK(rejected > 0);
}

TEST_CASE("flush empties every lane in priority order")
{
    PriorityQueue q;
    REQUIRE(q.enqueue(msg(1, MessageClass::Comfort)) == Admission::Accepted);
    REQUIRE(q.enqueue(msg(2, MessageClass::EventSafety)) == Admission::Accepted);
    REQUIRE(q.enqueue(msg(3, MessageClass::BeaconSafety)) == Admission::Accepted);
    const auto all = q.flush();
    REQUIRE(all.size() == 3);
    CHECK(all[0].id == 2);
    CHECK(all[1].id == 3);
    CHECK(all[2].id == 1);
    CHECK(q.empty());
}

TEST_CASE("channel mapping")
{
    ComfortRotor rotor;
    CHECK(assign_channel(MessageClass::EventSafety, rotor).id == 0);
    CHECK(assign_channel(MessageClass::BeaconSafety, rotor).id == 1);
    CHECK(assign_channel(MessageClass::Comfort, rotor).id == 2);
    CHECK(assign_channel(MessageClass::Comfort, rotor).id == 3);
    for (int i = 0; i < 3; ++i)
    {
        (void)assign_channel(MessageClass::Comfort, rotor);
    }
    CHECK(assign_channel(MessageClass::Comfort, rotor).id == 2);

    ComfortRotor a, b;
    for (int i = 0; i < 20; ++i)
    {
        CHECK(assign_channel(MessageClass::Comfort, a) == assign_channel(MessageClass::Comfort, b));
    }
}

TEST_CASE("link model invariants")
{
    LinkModel l;
    CHECK_NOTHROW(validate_link(l));
    l.loss_probability = 1.0;
    CHECK_THROWS_AS(validate_link(l), std::invalid_argument);
    l.loss_probability = 0.0;
    l.data_rate = 0.0;
    CHECK_THROWS_AS(validate_link(l), std::invalid_argument);
    CHECK(LinkModel{}.airtime(6000) == doctest::Approx(1e-3));
}
