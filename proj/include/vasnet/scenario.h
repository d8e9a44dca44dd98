#ifndef VASNET_SCENARIO_H
#define VASNET_SCENARIO_H

#include "vasnet/applications.h"
#include "vasnet/duty.h"
#include "vasnet/mac.h"
#include "vasnet/mobility.h"
#include "vasnet/topology.h"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vasnet
{

struct PreplacedVehicle
{
    double x{0.0};
    double speed{30.0};
    int lane{0};
    std::string plate; ///< empty means "VN<index>"
};

struct VehicleParams
{
    double authorized_speed{33.3};
    double radio_range{1000.0};
    std::vector<PreplacedVehicle> preplaced;
};

/**
 * Complete description of one experiment. Defaults are the reference
 * scenario: a 5 km two-lane highway with sensors every 250 m on both sides
 * and base stations at both ends.
 */
struct ScenarioConfig
{
    HighwayLayout layout;
    std::vector<Position> bs_positions{{0.0, 0.0}, {5000.0, 0.0}};
    LinkModel link;
    std::size_t queue_capacity{64};
    EnergyModel energy;
    double initial_energy{2.0};
    SleepPolicy sleep;
    ArrivalProcess arrivals;
    VehicleParams vehicles;
    AppParams app;
    double noise_sigma{1.0};
    std::uint64_t seed{1};
    double duration{3600.0};
    std::uint64_t event_budget{0}; ///< 0 = unlimited
    std::uint64_t sample_interval{10};
};

/// A configuration that violates an invariant; key() names the culprit.
class ConfigInvalid : public std::runtime_error
{
  public:
    ConfigInvalid(std::string key, const std::string& message);
    const std::string& key() const { return m_key; }

  private:
    std::string m_key;
};

/// File could not be read.
class ScenarioIoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Throws ConfigInvalid naming the first violated key.
void validate(const ScenarioConfig& config);

/// Sets one `key = value` pair. Unknown keys and bad values throw ConfigInvalid.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Parses a `k=v` override (same grammar as a scenario line).
void apply_override(ScenarioConfig& config, std::string_view assignment);

/**
 * Parses scenario text onto `base`: one `key = value` per line, `#` starts
 * a comment, blank lines ignored. The result is not validated.
 */
ScenarioConfig parse_scenario(std::string_view text, ScenarioConfig base = {});

ScenarioConfig load_scenario(const std::string& path);

/// Every key in canonical order; parse_scenario(format_scenario(c)) == c.
std::string format_scenario(const ScenarioConfig& config);

std::vector<std::string> scenario_keys();

/// Shortest round-trip representation of a double.
std::string format_double(double v);

} // namespace vasnet

#endif // VASNET_SCENARIO_H
