#include "vasnet/experiments.h"

#include "vasnet/localization.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vasnet
{

void
validate_budgets(std::span<const std::uint64_t> budgets)
{
    std::uint64_t prev = 0;
    for (const auto b : budgets)
    {
        if (b <= prev)
        {
            throw std::invalid_argument("budgets must be positive and strictly increasing");
        }
        prev = b;
    }
}

namespace
{

SweepPoint
sweep_point(const ScenarioConfig& config, std::uint64_t budget)
{
    ScenarioConfig c = config;
    c.event_budget = budget;
    return {budget, run(c).final_row()};
}

} // namespace

std::vector<SweepPoint>
sweep_events(const ScenarioConfig& config, std::span<const std::uint64_t> budgets)
{
    validate_budgets(budgets);
    validate(config);
    std::vector<SweepPoint> out(budgets.size());
    const auto n = static_cast<std::int64_t>(budgets.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i)
    {
        out[i] = sweep_point(config, budgets[i]);
    }
    return out;
}

std::vector<SweepPoint>
sweep_events_serial(const ScenarioConfig& config, std::span<const std::uint64_t> budgets)
{
    validate_budgets(budgets);
    validate(config);
    std::vector<SweepPoint> out;
    out.reserve(budgets.size());
    for (const auto b : budgets)
    {
        out.push_back(sweep_point(config, b));
    }
    return out;
}

ScenarioConfig
always_awake(ScenarioConfig config)
{
    config.sleep.p_min = 1.0;
    config.sleep.p_max = 1.0;
    return config;
}

PairedRun
compare_baseline(const ScenarioConfig& config, bool parallel)
{
    validate(config);
    const ScenarioConfig legs[2] = {config, always_awake(config)};
    PairedRun out;
    MetricsSeries* series[2] = {&out.sleep, &out.awake};
    std::vector<double>* arrivals[2] = {&out.sleep_arrivals, &out.awake_arrivals};
#pragma omp parallel for num_threads(2) if (parallel)
    for (int i = 0; i < 2; ++i)
    {
        Simulation sim(legs[i]);
        sim.run();
        *series[i] = sim.metrics();
        *arrivals[i] = sim.arrival_times();
    }
    return out;
}

namespace
{

std::vector<Position>
sensor_positions(const HighwayLayout& layout)
{
    std::vector<Position> out;
    const double y = layout.rss_offset();
    const auto per_side = static_cast<std::size_t>(std::floor(layout.length / layout.rss_spacing)) + 1;
    for (std::size_t i = 0; i < per_side; ++i)
    {
        const double x = static_cast<double>(i) * layout.rss_spacing;
        if (layout.rss_both_sides)
        {
            out.push_back({x, -y});
        }
        out.push_back({x, y});
    }
    return out;
}

// NaN marks a failed trial.
double
one_trial(const LocalizationTrials& setup, const std::vector<Position>& sensors, std::size_t i)
{
    RandomStream rng(mix64(setup.seed ^ static_cast<std::uint64_t>(i)));
    const double hw = setup.layout.half_width();
    const Position truth{rng.uniform() * setup.layout.length, -hw + 2.0 * hw * rng.uniform()};

    std::vector<std::size_t> order(sensors.size());
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        order[k] = k;
    }
    const auto k = std::min<std::size_t>(setup.anchors, order.size());
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](std::size_t a, std::size_t b) {
        const double da = squared_distance(truth, sensors[a]);
        const double db = squared_distance(truth, sensors[b]);
        return da != db ? da < db : a < b;
    });

    std::vector<AnchorObservation> obs;
    for (std::size_t j = 0; j < k; ++j)
    {
        const Position a = sensors[order[j]];
        const double d = distance(truth, a) + setup.noise_sigma * rng.normal(0.0, 1.0);
        obs.push_back({a, std::max(0.0, d)});
    }
    try
    {
        return distance(trilaterate(obs).estimate, truth);
    }
    catch (const LocalizationError&)
    {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

TrialErrors
collect(const std::vector<double>& raw)
{
    TrialErrors out;
    for (const double e : raw)
    {
        if (std::isnan(e))
        {
            ++out.failures;
        }
        else
        {
            out.errors.push_back(e);
        }
    }
    return out;
}

} // namespace

TrialErrors
localization_trials(const LocalizationTrials& setup)
{
    const auto sensors = sensor_positions(setup.layout);
    std::vector<double> raw(setup.trials);
    const auto n = static_cast<std::int64_t>(setup.trials);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
    {
        raw[i] = one_trial(setup, sensors, static_cast<std::size_t>(i));
    }
    return collect(raw);
}

TrialErrors
localization_trials_serial(const LocalizationTrials& setup)
{
    const auto sensors = sensor_positions(setup.layout);
    std::vector<double> raw(setup.trials);
    for (std::size_t i = 0; i < setup.trials; ++i)
    {
        raw[i] = one_trial(setup, sensors, i);
    }
    return collect(raw);
}

double
median(std::vector<double> values)
{
    if (values.empty())
    {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    const double hi = values[mid];
    if (values.size() % 2)
    {
        return hi;
    }
    return 0.5 * (hi + *std::max_element(values.begin(), values.begin() + mid));
}

} // namespace vasnet
