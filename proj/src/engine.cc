#include "vasnet/engine.h"

#include "vasnet/duty.h"
#include "vasnet/localization.h"
#include "vasnet/mobility.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vasnet
{

const char*
to_string(EventKind k)
{
    switch (k)
    {
    case EventKind::VehicleArrival:
        return "vehicle-arrival";
    case EventKind::BeaconTick:
        return "beacon-tick";
    case EventKind::EpochTick:
        return "epoch-tick";
    case EventKind::AppTrigger:
        return "app-trigger";
    case EventKind::TransmitComplete:
        return "transmit-complete";
    case EventKind::SimEnd:
        return "sim-end";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// PacketLedger

std::uint64_t
PacketLedger::open(bool to_bs)
{
    Fate f;
    f.to_bs = to_bs;
    m_fates.push_back(f);
    return m_fates.size();
}

bool
PacketLedger::deliver(std::uint64_t id, double latency, int hops)
{
    Fate& f = m_fates.at(id - 1);
    if (f.state != State::InFlight)
    {
        return false;
    }
    f.state = State::Delivered;
    f.latency = latency;
    f.hops = hops;
    ++m_delivered;
    if (f.to_bs)
    {
        ++m_bs_delivered;
        m_latency_sum += latency;
        m_hops_sum += hops;
    }
    return true;
}

bool
PacketLedger::drop(std::uint64_t id, DropReason reason)
{
    Fate& f = m_fates.at(id - 1);
    if (f.state != State::InFlight)
    {
        return false;
    }
    f.state = State::Dropped;
    f.reason = reason;
    ++m_dropped[static_cast<int>(reason)];
    return true;
}

std::uint64_t
PacketLedger::dropped_total() const
{
    return m_dropped[0] + m_dropped[1] + m_dropped[2];
}

double
PacketLedger::latency_mean() const
{
    return m_bs_delivered ? m_latency_sum / m_bs_delivered : 0.0;
}

double
PacketLedger::hops_mean() const
{
    return m_bs_delivered ? m_hops_sum / m_bs_delivered : 0.0;
}

// ---------------------------------------------------------------------------
// Simulation setup

namespace
{

ScenarioConfig
validated(ScenarioConfig c)
{
    validate(c);
    return c;
}

} // namespace

Simulation::Simulation(ScenarioConfig config)
    : m_cfg(validated(std::move(config))),
      m_arrival_rng(derive_seed(m_cfg.seed, StreamId::Arrival)),
      m_sleep_rng(derive_seed(m_cfg.seed, StreamId::Sleep)),
      m_noise_rng(derive_seed(m_cfg.seed, StreamId::Noise))
{
    RssDefaults defaults{m_cfg.initial_energy, m_cfg.link.default_range};
    Topology topo = build_topology(m_cfg.layout, m_cfg.bs_positions, defaults);
    m_net.layout = m_cfg.layout;
    m_net.rss = std::move(topo.rss);
    m_net.bs = std::move(topo.bs);
    m_net.bs_range = m_cfg.link.default_range;

    m_radio.link = m_cfg.link;
    m_radio.energy = m_cfg.energy;
    m_radio.draws = LinkDraws(derive_seed(m_cfg.seed, StreamId::Link));

    m_rss_rt.reserve(m_net.rss.size());
    for (std::size_t i = 0; i < m_net.rss.size(); ++i)
    {
        m_rss_rt.emplace_back(m_cfg.queue_capacity);
    }

    SimEvent end;
    end.time = m_cfg.duration;
    end.kind = EventKind::SimEnd;
    schedule(end);

    for (std::uint32_t i = 0; i < m_cfg.vehicles.preplaced.size(); ++i)
    {
        SimEvent ev;
        ev.kind = EventKind::VehicleArrival;
        ev.preplaced = i;
        schedule(ev);
    }
    if (m_cfg.arrivals.rate > 0.0)
    {
        const Arrival a = next_arrival(m_arrival_rng, m_cfg.arrivals, m_cfg.layout.lane_count);
        SimEvent ev;
        ev.time = a.delay;
        ev.kind = EventKind::VehicleArrival;
        ev.speed = a.speed;
        ev.lane = a.lane;
        schedule(ev);
    }

    SimEvent epoch;
    epoch.time = m_cfg.sleep.epoch;
    epoch.kind = EventKind::EpochTick;
    schedule(epoch);

    const auto n_acc = static_cast<std::uint32_t>(m_cfg.app.accidents.size());
    for (std::uint32_t i = 0; i < n_acc; ++i)
    {
        SimEvent ev;
        ev.time = m_cfg.app.accidents[i].time;
        ev.kind = EventKind::AppTrigger;
        ev.trigger = i;
        schedule(ev);
    }
    for (std::uint32_t i = 0; i < m_cfg.app.thefts.size(); ++i)
    {
        SimEvent ev;
        ev.time = m_cfg.app.thefts[i].time;
        ev.kind = EventKind::AppTrigger;
        ev.trigger = n_acc + i;
        schedule(ev);
    }

    sample();
}

void
Simulation::schedule(SimEvent ev)
{
    if (ev.time < m_now)
    {
        throw std::logic_error("event scheduled in the past");
    }
    ev.seq = m_next_seq++;
    ev.scheduled_at = m_now;
    m_events.push(std::move(ev));
}

// ---------------------------------------------------------------------------
// Main loop

void
Simulation::run()
{
    if (m_finished)
    {
        return;
    }
    while (!m_stop && !m_events.empty())
    {
        SimEvent ev = m_events.top();
        if (ev.time > m_cfg.duration)
        {
            break;
        }
        m_events.pop();
        m_now = ev.time;
        if (m_observer)
        {
            m_observer(ev);
        }
        dispatch(ev);
        if (m_sample_pending)
        {
            m_sample_pending = false;
            sample();
        }
        if (m_cfg.event_budget && m_ledger.generated() >= m_cfg.event_budget)
        {
            m_stop = true;
        }
    }
    if (!m_stop)
    {
        m_now = m_cfg.duration;
    }
    finish();
}

void
Simulation::dispatch(const SimEvent& ev)
{
    switch (ev.kind)
    {
    case EventKind::VehicleArrival:
        on_arrival(ev);
        break;
    case EventKind::BeaconTick:
        on_beacon(ev);
        break;
    case EventKind::EpochTick:
        on_epoch();
        break;
    case EventKind::AppTrigger:
        on_app_trigger(ev);
        break;
    case EventKind::TransmitComplete:
        on_transmit_complete(ev);
        break;
    case EventKind::SimEnd:
        m_stop = true;
        break;
    }
}

void
Simulation::finish()
{
    for (auto& s : m_net.rss)
    {
        settle(s, m_now, m_cfg.energy);
    }
    MetricsRow last = m_metrics.rows.back();
    sample();
    MetricsRow fresh = m_metrics.rows.back();
    m_metrics.rows.pop_back();
    if (fresh.events > last.events)
    {
        m_metrics.rows.push_back(fresh);
    }
    else if (m_metrics.rows.size() > 1)
    {
        // Same event count: the final row reports the end-of-run state.
        m_metrics.rows.back() = fresh;
    }
    m_finished = true;
}

double
Simulation::pending_energy() const
{
    double total = 0.0;
    for (const auto& s : m_net.rss)
    {
        double e = s.energy.remaining;
        const double dt = m_now - s.last_settled;
        if (!s.dead() && dt > 0.0)
        {
            e -= (s.awake() ? m_cfg.energy.p_idle : m_cfg.energy.p_sleep) * dt;
        }
        total += std::max(0.0, e);
    }
    return total;
}

void
Simulation::sample()
{
    MetricsRow r;
    r.events = m_ledger.generated();
    r.time = m_now;
    r.energy_j = pending_energy();
    r.generated = m_ledger.generated();
    r.delivered = m_ledger.delivered();
    r.drop_noroute = m_ledger.dropped(DropReason::NoRoute);
    r.drop_linkloss = m_ledger.dropped(DropReason::LinkLoss);
    r.drop_overflow = m_ledger.dropped(DropReason::QueueOverflow);
    r.in_flight = m_ledger.in_flight();
    r.latency_mean_s = m_ledger.latency_mean();
    r.hops_mean = m_ledger.hops_mean();
    m_metrics.rows.push_back(r);
}

std::optional<std::uint64_t>
Simulation::new_message(bool to_bs)
{
    if (m_cfg.event_budget && m_ledger.generated() >= m_cfg.event_budget)
    {
        return std::nullopt;
    }
    const std::uint64_t id = m_ledger.open(to_bs);
    if (m_ledger.generated() % m_cfg.sample_interval == 0)
    {
        m_sample_pending = true;
    }
    return id;
}

// ---------------------------------------------------------------------------
// Vehicles

VehicularNode&
Simulation::touch(std::uint32_t vehicle)
{
    VehicularNode& v = m_net.vehicles.at(vehicle);
    if (v.active && m_now > v.last_update)
    {
        v = advance_vehicle(v, m_now - v.last_update, m_cfg.layout.length);
        v.last_update = m_now;
        if (!v.active)
        {
            ++m_exits;
        }
    }
    return v;
}

std::uint64_t
Simulation::active_vehicles()
{
    std::uint64_t n = 0;
    for (std::uint32_t i = 0; i < m_net.vehicles.size(); ++i)
    {
        n += touch(i).active ? 1 : 0;
    }
    return n;
}

std::vector<NodeId>
Simulation::active_vehicles_in_range(const Position& from, double range)
{
    std::vector<NodeId> out;
    for (std::uint32_t i = 0; i < m_net.vehicles.size(); ++i)
    {
        const VehicularNode& v = touch(i);
        if (v.active && in_range(from, v.position, range))
        {
            out.push_back(v.id);
        }
    }
    return out;
}

void
Simulation::on_arrival(const SimEvent& ev)
{
    const auto index = static_cast<std::uint32_t>(m_net.vehicles.size());
    VehicularNode v;
    v.id = NodeId::vn(index);
    v.authorized_speed = m_cfg.vehicles.authorized_speed;
    v.radio_range = m_cfg.vehicles.radio_range;
    v.last_update = m_now;
    v.plate = "VN" + std::to_string(index);
    if (ev.preplaced)
    {
        const PreplacedVehicle& p = m_cfg.vehicles.preplaced.at(*ev.preplaced);
        v.position = {p.x, m_cfg.layout.lane_center(p.lane)};
        v.velocity = p.speed;
        if (!p.plate.empty())
        {
            v.plate = p.plate;
        }
    }
    else
    {
        v.position = {0.0, m_cfg.layout.lane_center(ev.lane)};
        v.velocity = ev.speed;
        const Arrival a = next_arrival(m_arrival_rng, m_cfg.arrivals, m_cfg.layout.lane_count);
        SimEvent next;
        next.time = m_now + a.delay;
        next.kind = EventKind::VehicleArrival;
        next.speed = a.speed;
        next.lane = a.lane;
        schedule(next);
    }
    m_net.vehicles.push_back(v);
    m_vehicle_rt.emplace_back();
    m_arrival_times.push_back(m_now);

    // Velocity is constant, so one check on entry covers the whole trip.
    check_speed(index);

    if (m_cfg.app.beacon_period > 0.0)
    {
        SimEvent b;
        b.time = m_now + m_cfg.app.beacon_period;
        b.kind = EventKind::BeaconTick;
        b.target = v.id;
        schedule(b);
    }
}

void
Simulation::on_beacon(const SimEvent& ev)
{
    const std::uint32_t index = ev.target->index;
    if (!touch(index).active)
    {
        return;
    }
    if (auto id = new_message(false))
    {
        const VehicularNode& v = m_net.vehicles[index];
        Message m = make_beacon(*id, v, m_now, m_cfg.app);
        const auto recipients = awake_rss_in_range(m_net, v.position, v.radio_range);
        const auto res = send(v.id, m, recipients);
        if (!res.received.empty())
        {
            m_ledger.deliver(m.id, 0.0, 1);
        }
        else
        {
            m_ledger.drop(m.id, recipients.empty() ? DropReason::NoRoute : DropReason::LinkLoss);
        }
    }
    SimEvent next = ev;
    next.time = m_now + m_cfg.app.beacon_period;
    schedule(next);
}

void
Simulation::check_speed(std::uint32_t index)
{
    VehicleRuntime& rt = m_vehicle_rt[index];
    const VehicularNode& v = touch(index);
    if (!v.active || rt.speed_reported || !violates_speed(v))
    {
        return;
    }
    const auto id = new_message(true);
    if (!id)
    {
        return;
    }
    rt.speed_reported = true;
    const LocalizationOutcome loc = localize(v, m_net.rss, m_cfg.noise_sigma, m_noise_rng);
    const NodeId bs = *nearest_bs(m_net, v.position);
    m_speed_reports.push_back({*id, v.id, m_now, v.position, loc});
    vehicle_to_bs(index, make_speed_report(*id, v, loc, bs, m_now, m_cfg.app));
}

// ---------------------------------------------------------------------------
// Sensors

void
Simulation::on_epoch()
{
    for (std::uint32_t i = 0; i < m_net.rss.size(); ++i)
    {
        RoadsideSensor& s = m_net.rss[i];
        RssRuntime& rt = m_rss_rt[i];
        if (s.dead())
        {
            // Keep the sleep stream aligned with the epoch count.
            (void)m_sleep_rng.uniform();
            continue;
        }
        epoch_tick(s, rt.recent_importance, m_cfg.sleep, m_cfg.energy, m_now, m_sleep_rng);
        rt.recent_importance = 0.0;
        if (!s.awake())
        {
            flush(i);
        }
        else
        {
            start_service(i);
        }
    }
    SimEvent next;
    next.time = m_now + m_cfg.sleep.epoch;
    next.kind = EventKind::EpochTick;
    if (next.time <= m_cfg.duration)
    {
        schedule(next);
    }
}

TransmitResult
Simulation::send(const NodeId& sender, Message& m, std::span<const NodeId> recipients)
{
    ComfortRotor* rotor = nullptr;
    ComfortRotor bs_rotor;
    if (sender.kind == NodeKind::RSS)
    {
        rotor = &m_rss_rt[sender.index].rotor;
    }
    else if (sender.kind == NodeKind::VN)
    {
        rotor = &m_vehicle_rt[sender.index].rotor;
    }
    else
    {
        rotor = &bs_rotor;
    }
    m.channel = assign_channel(m.cls, *rotor).id;

    TransmitResult res = transmit(m_net, sender, m, recipients, m_radio);
    for (const auto& r : res.received)
    {
        if (r.kind == NodeKind::RSS)
        {
            auto& imp = m_rss_rt[r.index].recent_importance;
            imp = std::max(imp, m.importance);
        }
    }
    for (const auto& d : res.depleted)
    {
        flush(d.index);
    }
    return res;
}

void
Simulation::resolve_drop(const Message& m, DropReason reason)
{
    if (m.ledger_copy)
    {
        m_ledger.drop(m.id, reason);
    }
}

void
Simulation::flush(std::uint32_t rss)
{
    RssRuntime& rt = m_rss_rt[rss];
    if (rt.in_service)
    {
        resolve_drop(*rt.in_service, DropReason::NoRoute);
        rt.in_service.reset();
    }
    for (const auto& m : rt.queue.flush())
    {
        resolve_drop(m, DropReason::NoRoute);
    }
    ++rt.token;
}

void
Simulation::accept_at_rss(const NodeId& rss, Message m)
{
    RssRuntime& rt = m_rss_rt[rss.index];
    const std::uint64_t id = m.id;
    const bool ledger = m.ledger_copy;
    if (rt.queue.enqueue(std::move(m)) == Admission::LaneFull)
    {
        if (ledger)
        {
            m_ledger.drop(id, DropReason::QueueOverflow);
        }
        return;
    }
    start_service(rss.index);
}

void
Simulation::start_service(std::uint32_t rss)
{
    RssRuntime& rt = m_rss_rt[rss];
    if (rt.in_service || !m_net.rss[rss].awake())
    {
        return;
    }
    auto m = rt.queue.dequeue();
    if (!m)
    {
        return;
    }
    SimEvent ev;
    ev.time = m_now + m_radio.link.airtime(m->size_bits);
    ev.kind = EventKind::TransmitComplete;
    ev.target = NodeId::rss(rss);
    ev.token = rt.token;
    rt.in_service = std::move(*m);
    schedule(ev);
}

void
Simulation::on_transmit_complete(const SimEvent& ev)
{
    const std::uint32_t rss = ev.target->index;
    RssRuntime& rt = m_rss_rt[rss];
    if (ev.token != rt.token || !rt.in_service)
    {
        return;
    }
    Message m = std::move(*rt.in_service);
    rt.in_service.reset();

    if (m.is_unicast())
    {
        forward_unicast(rss, std::move(m));
    }
    else if (std::holds_alternative<Geocast>(m.destination))
    {
        relay_geocast(rss, std::move(m));
    }
    else
    {
        relay_flood(rss, std::move(m));
    }
    start_service(rss);
}

void
Simulation::vehicle_to_bs(std::uint32_t vehicle, Message m)
{
    const VehicularNode& v = m_net.vehicles[vehicle];
    const auto entry = nearest_awake_rss(m_net, v.position, v.radio_range);
    if (!entry)
    {
        resolve_drop(m, DropReason::NoRoute);
        return;
    }
    const NodeId to[] = {*entry};
    const auto res = send(v.id, m, to);
    if (res.received.empty())
    {
        const bool gone = !res.depleted.empty();
        resolve_drop(m, gone ? DropReason::NoRoute : DropReason::LinkLoss);
        return;
    }
    m.record_hop(*entry);
    accept_at_rss(*entry, std::move(m));
}

void
Simulation::forward_unicast(std::uint32_t rss, Message m)
{
    const NodeId self = NodeId::rss(rss);
    const auto& bs = m_net.bs.at(std::get<ToBaseStation>(m.destination).bs.index);
    const HopPlan plan = plan_hop(m_net, self, bs);
    if (plan.kind == HopPlan::Kind::NoRoute)
    {
        resolve_drop(m, DropReason::NoRoute);
        return;
    }
    const NodeId to[] = {plan.next};
    const auto res = send(self, m, to);
    if (res.received.empty())
    {
        const bool gone = std::find(res.depleted.begin(), res.depleted.end(), plan.next) != res.depleted.end();
        resolve_drop(m, gone ? DropReason::NoRoute : DropReason::LinkLoss);
        return;
    }
    m.record_hop(plan.next);
    if (plan.kind == HopPlan::Kind::DeliverToBs)
    {
        on_delivered_to_bs(m);
        return;
    }
    accept_at_rss(plan.next, std::move(m));
}

void
Simulation::on_delivered_to_bs(Message& m)
{
    if (m.ledger_copy)
    {
        m_ledger.deliver(m.id, m_now - m.created_at, m.hop_count);
    }
    if (const auto* reply = std::get_if<TheftReply>(&m.payload))
    {
        const auto it = m_theft_by_msg.find(reply->query_id);
        if (it != m_theft_by_msg.end() && !m_thefts[it->second].first_reply)
        {
            m_thefts[it->second].first_reply =
                TheftReplyRecord{m.id, reply->vehicle, *reply->relay_rss, *reply->rss_position, m_now};
        }
    }
}

void
Simulation::relay_flood(std::uint32_t rss, Message m)
{
    const NodeId self = NodeId::rss(rss);
    const RoadsideSensor& s = m_net.rss[rss];
    if (const auto it = m_theft_by_msg.find(m.id); it != m_theft_by_msg.end())
    {
        ++m_thefts[it->second].forwards;
    }
    std::vector<NodeId> recipients;
    for (const auto& other : m_net.rss)
    {
        if (other.id != self && in_range(s.position, other.position, s.radio_range))
        {
            recipients.push_back(other.id);
        }
    }
    const auto vehicles = active_vehicles_in_range(s.position, s.radio_range);
    recipients.insert(recipients.end(), vehicles.begin(), vehicles.end());

    const auto res = send(self, m, recipients);
    for (const auto& r : res.received)
    {
        if (r.kind == NodeKind::RSS)
        {
            if (m_rss_rt[r.index].forwarded.insert(m.id).second)
            {
                Message copy = m;
                copy.ledger_copy = false;
                copy.record_hop(r);
                accept_at_rss(r, std::move(copy));
            }
        }
        else if (r.kind == NodeKind::VN)
        {
            answer_theft(r, self, m);
        }
    }
}

void
Simulation::answer_theft(const NodeId& vehicle, const NodeId& heard_from, const Message& query_msg)
{
    const auto* query = std::get_if<TheftQuery>(&query_msg.payload);
    if (!query)
    {
        return;
    }
    VehicleRuntime& rt = m_vehicle_rt[vehicle.index];
    const VehicularNode& v = m_net.vehicles[vehicle.index];
    if (v.plate != query->plate || rt.answered.count(query_msg.id))
    {
        return;
    }
    const auto id = new_message(true);
    if (!id)
    {
        return;
    }
    rt.answered.insert(query_msg.id);
    if (const auto it = m_theft_by_msg.find(query_msg.id); it != m_theft_by_msg.end())
    {
        m_thefts[it->second].replied_vehicles.push_back(vehicle);
    }

    Message reply = make_theft_reply(*id, *query, query_msg.id, v, m_now, m_cfg.app);
    const RoadsideSensor& relay = m_net.rss[heard_from.index];
    if (!relay.awake() || !in_range(v.position, relay.position, v.radio_range))
    {
        resolve_drop(reply, DropReason::NoRoute);
        return;
    }
    const NodeId to[] = {heard_from};
    const auto res = send(vehicle, reply, to);
    if (res.received.empty())
    {
        resolve_drop(reply, res.depleted.empty() ? DropReason::LinkLoss : DropReason::NoRoute);
        return;
    }
    auto& payload = std::get<TheftReply>(reply.payload);
    payload.relay_rss = heard_from;
    payload.rss_position = relay.position;
    reply.record_hop(heard_from);
    accept_at_rss(heard_from, std::move(reply));
}

void
Simulation::relay_geocast(std::uint32_t rss, Message m)
{
    const NodeId self = NodeId::rss(rss);
    const RoadsideSensor& s = m_net.rss[rss];
    Geocast geo = std::get<Geocast>(m.destination);
    AccidentRecord* record = nullptr;
    if (const auto it = m_accident_by_msg.find(m.id); it != m_accident_by_msg.end())
    {
        record = &m_accidents[it->second];
        record->relays.push_back(self);
    }

    std::vector<NodeId> recipients;
    for (const auto& other : m_net.rss)
    {
        if (other.id != self && in_range(s.position, other.position, s.radio_range))
        {
            recipients.push_back(other.id);
        }
    }
    const auto vehicles = active_vehicles_in_range(s.position, s.radio_range);
    recipients.insert(recipients.end(), vehicles.begin(), vehicles.end());

    const Position relay_pos = s.position;
    const auto res = send(self, m, recipients);
    std::optional<NodeId> next;
    double next_x = std::numeric_limits<double>::infinity();
    for (const auto& r : res.received)
    {
        if (r.kind == NodeKind::VN)
        {
            const Position p = m_net.vehicles[r.index].position;
            if (record && p.x >= geo.region_lo && p.x < geo.region_hi && !record->warned.count(r))
            {
                record->warned.emplace(r, WarnedVehicle{r, self, p, relay_pos, m_now});
            }
        }
        else if (r.kind == NodeKind::RSS)
        {
            const double x = m_net.rss[r.index].position.x;
            if (x >= geo.region_lo && x < next_x && !m_rss_rt[r.index].forwarded.count(m.id))
            {
                next_x = x;
                next = r;
            }
        }
    }
    if (geo.relays_left > 1 && next)
    {
        m_rss_rt[next->index].forwarded.insert(m.id);
        geo.relays_left -= 1;
        m.destination = geo;
        m.record_hop(*next);
        accept_at_rss(*next, std::move(m));
    }
}

// ---------------------------------------------------------------------------
// Application triggers

void
Simulation::on_app_trigger(const SimEvent& ev)
{
    const auto n_acc = static_cast<std::uint32_t>(m_cfg.app.accidents.size());
    if (ev.trigger < n_acc)
    {
        const auto& a = m_cfg.app.accidents[ev.trigger];
        std::optional<std::uint32_t> vehicle;
        if (a.vehicle)
        {
            if (*a.vehicle < m_net.vehicles.size() && touch(*a.vehicle).active)
            {
                vehicle = a.vehicle;
            }
        }
        else
        {
            for (std::uint32_t i = 0; i < m_net.vehicles.size() && !vehicle; ++i)
            {
                if (touch(i).active)
                {
                    vehicle = i;
                }
            }
        }
        if (vehicle)
        {
            raise_accident(*vehicle);
        }
        return;
    }
    const auto& t = m_cfg.app.thefts.at(ev.trigger - n_acc);
    theft_query(t.bs, t.plate);
}

void
Simulation::raise_accident(std::uint32_t index)
{
    const VehicularNode& v = touch(index);
    const auto id = new_message(true);
    if (!id)
    {
        return;
    }
    const LocalizationOutcome loc = localize(v, m_net.rss, m_cfg.noise_sigma, m_noise_rng);
    const NodeId bs = *nearest_bs(m_net, v.position);
    Message report = make_accident(*id, v, loc, bs, m_now, m_cfg.app);

    AccidentRecord rec;
    rec.msg_id = *id;
    rec.vehicle = v.id;
    rec.time = m_now;
    rec.accident_position = v.position;
    rec.region = warning_region(v.position.x, m_cfg.app.warn_depth, m_cfg.layout.rss_spacing);
    m_accident_by_msg[*id] = m_accidents.size();
    m_accidents.push_back(rec);

    Message warning = report;
    warning.ledger_copy = false;
    warning.destination = rec.region;

    vehicle_to_bs(index, std::move(report));

    if (m_cfg.app.warn_depth <= 0)
    {
        return;
    }
    // Hand the warning to an awake sensor level with or ahead of the vehicle,
    // so its upstream half-disk covers the whole ribbon behind the accident.
    std::optional<NodeId> entry;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : m_net.rss)
    {
        const double d = distance(v.position, s.position);
        if (s.awake() && d <= v.radio_range && s.position.x >= v.position.x && d < best)
        {
            best = d;
            entry = s.id;
        }
    }
    if (!entry)
    {
        entry = nearest_awake_rss(m_net, v.position, v.radio_range);
    }
    if (!entry)
    {
        return;
    }
    const NodeId to[] = {*entry};
    const auto res = send(v.id, warning, to);
    if (res.received.empty())
    {
        return;
    }
    m_accidents.back().geocast_entry = *entry;
    m_rss_rt[entry->index].forwarded.insert(warning.id);
    warning.record_hop(*entry);
    accept_at_rss(*entry, std::move(warning));
}

void
Simulation::theft_query(std::uint32_t bs_index, const std::string& plate)
{
    const auto id = new_message(false);
    if (!id)
    {
        return;
    }
    const BaseStation& bs = m_net.bs.at(bs_index);
    Message m = make_theft_query(*id, plate, bs.id, m_now, m_cfg.app);

    TheftRecord rec;
    rec.query_id = *id;
    rec.bs = bs.id;
    rec.plate = plate;
    rec.time = m_now;
    m_theft_by_msg[*id] = m_thefts.size();
    m_thefts.push_back(rec);

    std::vector<NodeId> recipients;
    bool any_awake = false;
    for (const auto& s : m_net.rss)
    {
        if (in_range(bs.position, s.position, m_net.bs_range))
        {
            recipients.push_back(s.id);
            any_awake = any_awake || s.awake();
        }
    }
    const auto res = send(bs.id, m, recipients);
    if (res.received.empty())
    {
        m_ledger.drop(m.id, any_awake ? DropReason::LinkLoss : DropReason::NoRoute);
        return;
    }
    m_ledger.deliver(m.id, 0.0, 1);
    for (const auto& r : res.received)
    {
        if (m_rss_rt[r.index].forwarded.insert(m.id).second)
        {
            Message copy = m;
            copy.ledger_copy = false;
            copy.record_hop(r);
            accept_at_rss(r, std::move(copy));
        }
    }
}

MetricsSeries
run(const ScenarioConfig& config)
{
    Simulation sim(config);
    sim.run();
    return sim.metrics();
}

} // namespace vasnet
