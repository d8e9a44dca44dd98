#ifndef VASNET_EXPERIMENTS_H
#define VASNET_EXPERIMENTS_H

#include "vasnet/engine.h"

#include <cstdint>
#include <span>
#include <vector>

namespace vasnet
{

struct SweepPoint
{
    std::uint64_t budget{0};
    MetricsRow final_row;

    bool operator==(const SweepPoint&) const = default;
};

/// Throws std::invalid_argument unless budgets are positive and strictly increasing.
void validate_budgets(std::span<const std::uint64_t> budgets);

/// One independent run per budget, all with the config's seed. Runs execute in parallel.
std::vector<SweepPoint> sweep_events(const ScenarioConfig& config, std::span<const std::uint64_t> budgets);
/// Same result, one run after another.
std::vector<SweepPoint> sweep_events_serial(const ScenarioConfig& config, std::span<const std::uint64_t> budgets);

struct PairedRun
{
    MetricsSeries sleep;
    MetricsSeries awake;
    std::vector<double> sleep_arrivals;
    std::vector<double> awake_arrivals;
};

/// `config` with the sleep policy forced to always-awake.
ScenarioConfig always_awake(ScenarioConfig config);

/// Runs `config` and its always-awake twin with the same seed.
PairedRun compare_baseline(const ScenarioConfig& config, bool parallel = true);

struct LocalizationTrials
{
    HighwayLayout layout;
    int anchors{3};          ///< nearest sensors used per trial
    double noise_sigma{0.0}; ///< ranging error standard deviation, m
    std::size_t trials{500};
    std::uint64_t seed{1};
};

struct TrialErrors
{
    std::vector<double> errors; ///< successful trials, in trial order
    std::size_t failures{0};

    bool operator==(const TrialErrors&) const = default;
};

/**
 * Each trial places a vehicle uniformly in the highway strip and
 * trilaterates from its `anchors` nearest sensors. Trial i draws from its
 * own stream mix64(seed ^ i), so the same positions and unit noise draws
 * recur for every sigma.
 */
TrialErrors localization_trials(const LocalizationTrials& setup);
TrialErrors localization_trials_serial(const LocalizationTrials& setup);

double median(std::vector<double> values);

} // namespace vasnet

#endif // VASNET_EXPERIMENTS_H
