#ifndef VASNET_ENGINE_H
#define VASNET_ENGINE_H

#include "vasnet/applications.h"
#include "vasnet/radio.h"
#include "vasnet/rng.h"
#include "vasnet/routing.h"
#include "vasnet/scenario.h"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

namespace vasnet
{

enum class EventKind : std::uint8_t
{
    VehicleArrival,
    BeaconTick,
    EpochTick,
    AppTrigger,
    TransmitComplete,
    SimEnd,
};

const char* to_string(EventKind k);

struct SimEvent
{
    double time{0.0};
    std::uint64_t seq{0};
    EventKind kind{EventKind::SimEnd};
    std::optional<NodeId> target; ///< nullopt = global
    double scheduled_at{0.0};

    // VehicleArrival: speed/lane of a Poisson arrival, or the preplaced slot.
    double speed{0.0};
    int lane{0};
    std::optional<std::uint32_t> preplaced;
    // AppTrigger: index into the accident list, then the theft list.
    std::uint32_t trigger{0};
    // TransmitComplete: service generation; stale tokens are ignored.
    std::uint64_t token{0};
};

struct MetricsRow
{
    std::uint64_t events{0};
    double time{0.0};
    double energy_j{0.0};
    std::uint64_t generated{0};
    std::uint64_t delivered{0};
    std::uint64_t drop_noroute{0};
    std::uint64_t drop_linkloss{0};
    std::uint64_t drop_overflow{0};
    std::uint64_t in_flight{0};
    double latency_mean_s{0.0};
    double hops_mean{0.0};

    std::uint64_t dropped() const { return drop_noroute + drop_linkloss + drop_overflow; }
    bool operator==(const MetricsRow&) const = default;
};

struct MetricsSeries
{
    std::vector<MetricsRow> rows;

    const MetricsRow& final_row() const { return rows.back(); }
    bool operator==(const MetricsSeries&) const = default;
};

/**
 * Terminal fate of every generated application message, keyed by id.
 * Base-station-bound messages resolve on arrival at the station;
 * broadcasts resolve on their first successful reception by a sensor.
 */
class PacketLedger
{
  public:
    enum class State : std::uint8_t
    {
        InFlight,
        Delivered,
        Dropped,
    };

    struct Fate
    {
        State state{State::InFlight};
        DropReason reason{DropReason::NoRoute};
        bool to_bs{false};
        double latency{0.0};
        int hops{0};
    };

    std::uint64_t open(bool to_bs);
    /// Both return false if `id` was already resolved.
    bool deliver(std::uint64_t id, double latency, int hops);
    bool drop(std::uint64_t id, DropReason reason);

    const Fate& fate(std::uint64_t id) const { return m_fates.at(id - 1); }
    bool resolved(std::uint64_t id) const { return fate(id).state != State::InFlight; }

    std::uint64_t generated() const { return m_fates.size(); }
    std::uint64_t delivered() const { return m_delivered; }
    std::uint64_t dropped(DropReason r) const { return m_dropped[static_cast<int>(r)]; }
    std::uint64_t dropped_total() const;
    std::uint64_t in_flight() const { return generated() - delivered() - dropped_total(); }
    double latency_mean() const;
    double hops_mean() const;

  private:
    std::vector<Fate> m_fates;
    std::uint64_t m_delivered{0};
    std::uint64_t m_dropped[3]{0, 0, 0};
    std::uint64_t m_bs_delivered{0};
    double m_latency_sum{0.0};
    double m_hops_sum{0.0};
};

/**
 * Single-threaded discrete-event run of one scenario. Events execute in
 * (time, seq) order; all randomness comes from the four sub-streams split
 * from the scenario seed, so a run is a pure function of its config.
 *
 * "Events" in the metrics are application messages generated (beacons,
 * reports, accident notices, theft queries and replies). A sample row is
 * recorded at 0 and every sample_interval messages; the run stops at
 * sim.duration or right after the event_budget-th message.
 */
class Simulation
{
  public:
    /// Throws ConfigInvalid if the config does not validate.
    explicit Simulation(ScenarioConfig config);

    void run();

    const ScenarioConfig& config() const { return m_cfg; }
    const MetricsSeries& metrics() const { return m_metrics; }
    const Network& network() const { return m_net; }
    const PacketLedger& ledger() const { return m_ledger; }
    double now() const { return m_now; }

    const std::vector<double>& arrival_times() const { return m_arrival_times; }
    std::uint64_t arrivals() const { return m_arrival_times.size(); }
    std::uint64_t exits() const { return m_exits; }
    /// Vehicles still on the highway at the current time.
    std::uint64_t active_vehicles();

    const std::vector<SpeedReportRecord>& speed_reports() const { return m_speed_reports; }
    const std::vector<AccidentRecord>& accidents() const { return m_accidents; }
    const std::vector<TheftRecord>& thefts() const { return m_thefts; }

    /// Called before each event executes.
    void set_event_observer(std::function<void(const SimEvent&)> f) { m_observer = std::move(f); }

  private:
    struct Later
    {
        bool operator()(const SimEvent& a, const SimEvent& b) const
        {
            return a.time != b.time ? a.time > b.time : a.seq > b.seq;
        }
    };

    struct RssRuntime
    {
        explicit RssRuntime(std::size_t capacity) : queue(capacity) {}
        PriorityQueue queue;
        std::optional<Message> in_service;
        std::uint64_t token{0};
        double recent_importance{0.0};
        std::set<std::uint64_t> forwarded;
        ComfortRotor rotor;
    };

    struct VehicleRuntime
    {
        bool speed_reported{false};
        std::set<std::uint64_t> answered;
        ComfortRotor rotor;
    };

    void schedule(SimEvent ev);
    void dispatch(const SimEvent& ev);
    void on_arrival(const SimEvent& ev);
    void on_beacon(const SimEvent& ev);
    void on_epoch();
    void on_app_trigger(const SimEvent& ev);
    void on_transmit_complete(const SimEvent& ev);

    void raise_accident(std::uint32_t vehicle);
    void theft_query(std::uint32_t bs, const std::string& plate);
    void check_speed(std::uint32_t vehicle);

    std::optional<std::uint64_t> new_message(bool to_bs);
    VehicularNode& touch(std::uint32_t vehicle);
    std::vector<NodeId> active_vehicles_in_range(const Position& from, double range);
    TransmitResult send(const NodeId& sender, Message& m, std::span<const NodeId> recipients);
    void vehicle_to_bs(std::uint32_t vehicle, Message m);
    void accept_at_rss(const NodeId& rss, Message m);
    void start_service(std::uint32_t rss);
    void flush(std::uint32_t rss);
    void forward_unicast(std::uint32_t rss, Message m);
    void relay_flood(std::uint32_t rss, Message m);
    void relay_geocast(std::uint32_t rss, Message m);
    void answer_theft(const NodeId& vehicle, const NodeId& heard_from, const Message& query);
    void resolve_drop(const Message& m, DropReason reason);
    void on_delivered_to_bs(Message& m);

    double pending_energy() const;
    void sample();
    void finish();

    ScenarioConfig m_cfg;
    Network m_net;
    Radio m_radio;
    RandomStream m_arrival_rng;
    RandomStream m_sleep_rng;
    RandomStream m_noise_rng;

    std::priority_queue<SimEvent, std::vector<SimEvent>, Later> m_events;
    std::uint64_t m_next_seq{0};
    double m_now{0.0};
    bool m_stop{false};
    bool m_sample_pending{false};
    bool m_finished{false};

    std::vector<RssRuntime> m_rss_rt;
    std::vector<VehicleRuntime> m_vehicle_rt;
    std::vector<double> m_arrival_times;
    std::uint64_t m_exits{0};

    PacketLedger m_ledger;
    MetricsSeries m_metrics;

    std::vector<SpeedReportRecord> m_speed_reports;
    std::vector<AccidentRecord> m_accidents;
    std::vector<TheftRecord> m_thefts;
    std::map<std::uint64_t, std::size_t> m_accident_by_msg;
    std::map<std::uint64_t, std::size_t> m_theft_by_msg;

    std::function<void(const SimEvent&)> m_observer;
};

/// Runs `config` to completion and returns its metrics series.
MetricsSeries run(const ScenarioConfig& config);

} // namespace vasnet

#endif // VASNET_ENGINE_H
