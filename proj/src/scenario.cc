#include "vasnet/scenario.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <type_traits>

namespace vasnet
{

ConfigInvalid::ConfigInvalid(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), m_key(std::move(key))
{
}

namespace
{

std::string_view
trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
    {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view>
split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos)
        {
            return parts;
        }
        start = pos + 1;
    }
}

double
to_double(std::string_view key, std::string_view v)
{
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc{} || ptr != end || !std::isfinite(out))
    {
        throw ConfigInvalid(std::string(key), "expected a number, got '" + std::string(v) + "'");
    }
    return out;
}

std::uint64_t
to_u64(std::string_view key, std::string_view v)
{
    std::uint64_t out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc{} || ptr != end)
    {
        throw ConfigInvalid(std::string(key), "expected a non-negative integer, got '" + std::string(v) + "'");
    }
    return out;
}

int
to_int(std::string_view key, std::string_view v)
{
    int out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc{} || ptr != end)
    {
        throw ConfigInvalid(std::string(key), "expected an integer, got '" + std::string(v) + "'");
    }
    return out;
}

bool
to_bool(std::string_view key, std::string_view v)
{
    if (v == "true" || v == "1")
    {
        return true;
    }
    if (v == "false" || v == "0")
    {
        return false;
    }
    throw ConfigInvalid(std::string(key), "expected true or false, got '" + std::string(v) + "'");
}

std::string
check_plate(std::string_view key, std::string_view v)
{
    if (v.empty() || v.find_first_of(" \t:,#=") != std::string_view::npos)
    {
        throw ConfigInvalid(std::string(key), "invalid plate '" + std::string(v) + "'");
    }
    return std::string(v);
}

/// Splits a comma list; an empty value or "none" is the empty list.
std::vector<std::string_view>
list_items(std::string_view v)
{
    v = trim(v);
    if (v.empty() || v == "none")
    {
        return {};
    }
    return split(v, ',');
}

std::string
join(const std::vector<std::string>& items)
{
    if (items.empty())
    {
        return "none";
    }
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
    {
        out += (i ? ", " : "") + items[i];
    }
    return out;
}

std::vector<Position>
parse_positions(std::string_view key, std::string_view v)
{
    std::vector<Position> out;
    for (auto item : list_items(v))
    {
        const auto f = split(item, ':');
        if (f.size() != 2)
        {
            throw ConfigInvalid(std::string(key), "expected x:y, got '" + std::string(item) + "'");
        }
        out.push_back({to_double(key, f[0]), to_double(key, f[1])});
    }
    return out;
}

std::vector<PreplacedVehicle>
parse_preplaced(std::string_view key, std::string_view v)
{
    std::vector<PreplacedVehicle> out;
    for (auto item : list_items(v))
    {
        const auto f = split(item, ':');
        if (f.size() != 3 && f.size() != 4)
        {
            throw ConfigInvalid(std::string(key), "expected x:speed:lane[:plate], got '" + std::string(item) + "'");
        }
        PreplacedVehicle p{to_double(key, f[0]), to_double(key, f[1]), to_int(key, f[2]), {}};
        if (f.size() == 4)
        {
            p.plate = check_plate(key, f[3]);
        }
        out.push_back(p);
    }
    return out;
}

std::vector<AccidentTrigger>
parse_accidents(std::string_view key, std::string_view v)
{
    std::vector<AccidentTrigger> out;
    for (auto item : list_items(v))
    {
        const auto f = split(item, ':');
        if (f.size() != 2)
        {
            throw ConfigInvalid(std::string(key), "expected time:vehicle, got '" + std::string(item) + "'");
        }
        AccidentTrigger a{to_double(key, f[0]), std::nullopt};
        if (f[1] != "any")
        {
            a.vehicle = static_cast<std::uint32_t>(to_u64(key, f[1]));
        }
        out.push_back(a);
    }
    return out;
}

std::vector<TheftTrigger>
parse_thefts(std::string_view key, std::string_view v)
{
    std::vector<TheftTrigger> out;
    for (auto item : list_items(v))
    {
        const auto f = split(item, ':');
        if (f.size() != 3)
        {
            throw ConfigInvalid(std::string(key), "expected time:bs:plate, got '" + std::string(item) + "'");
        }
        out.push_back({to_double(key, f[0]), static_cast<std::uint32_t>(to_u64(key, f[1])), check_plate(key, f[2])});
    }
    return out;
}

struct Field
{
    std::string_view key;
    std::function<void(ScenarioConfig&, std::string_view key, std::string_view value)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

template <typename Getter>
Field
real_field(std::string_view key, Getter member)
{
    return {key,
            [member](ScenarioConfig& c, std::string_view k, std::string_view v) { member(c) = to_double(k, v); },
            [member](const ScenarioConfig& c) { return format_double(member(c)); }};
}

template <typename Getter>
Field
int_field(std::string_view key, Getter member)
{
    return {key,
            [member](ScenarioConfig& c, std::string_view k, std::string_view v) { member(c) = to_int(k, v); },
            [member](const ScenarioConfig& c) { return std::to_string(member(c)); }};
}

template <typename Getter>
Field
count_field(std::string_view key, Getter member)
{
    return {key,
            [member](ScenarioConfig& c, std::string_view k, std::string_view v) {
                using T = std::remove_reference_t<decltype(member(c))>;
                member(c) = static_cast<T>(to_u64(k, v));
            },
            [member](const ScenarioConfig& c) { return std::to_string(member(c)); }};
}

const std::vector<Field>&
fields()
{
    using C = ScenarioConfig;
    static const std::vector<Field> table = {
        real_field("layout.length", [](auto& c) -> auto& { return c.layout.length; }),
        int_field("layout.lane_count", [](auto& c) -> auto& { return c.layout.lane_count; }),
        real_field("layout.lane_width", [](auto& c) -> auto& { return c.layout.lane_width; }),
        real_field("layout.rss_spacing", [](auto& c) -> auto& { return c.layout.rss_spacing; }),
        real_field("layout.rss_setback", [](auto& c) -> auto& { return c.layout.rss_setback; }),
        {"layout.rss_both_sides",
         [](C& c, std::string_view k, std::string_view v) { c.layout.rss_both_sides = to_bool(k, v); },
         [](const C& c) { return std::string(c.layout.rss_both_sides ? "true" : "false"); }},
        {"bs.positions",
         [](C& c, std::string_view k, std::string_view v) { c.bs_positions = parse_positions(k, v); },
         [](const C& c) {
             std::vector<std::string> items;
             for (const auto& p : c.bs_positions)
             {
                 items.push_back(format_double(p.x) + ":" + format_double(p.y));
             }
             return join(items);
         }},
        real_field("link.loss_probability", [](auto& c) -> auto& { return c.link.loss_probability; }),
        real_field("link.data_rate", [](auto& c) -> auto& { return c.link.data_rate; }),
        real_field("link.range", [](auto& c) -> auto& { return c.link.default_range; }),
        count_field("mac.queue_capacity", [](auto& c) -> auto& { return c.queue_capacity; }),
        real_field("energy.initial", [](auto& c) -> auto& { return c.initial_energy; }),
        real_field("energy.e_elec", [](auto& c) -> auto& { return c.energy.e_elec; }),
        real_field("energy.eps_amp", [](auto& c) -> auto& { return c.energy.eps_amp; }),
        real_field("energy.p_idle", [](auto& c) -> auto& { return c.energy.p_idle; }),
        real_field("energy.p_sleep", [](auto& c) -> auto& { return c.energy.p_sleep; }),
        real_field("sleep.w_energy", [](auto& c) -> auto& { return c.sleep.w_energy; }),
        real_field("sleep.w_importance", [](auto& c) -> auto& { return c.sleep.w_importance; }),
        real_field("sleep.w_prev", [](auto& c) -> auto& { return c.sleep.w_prev; }),
        real_field("sleep.p_min", [](auto& c) -> auto& { return c.sleep.p_min; }),
        real_field("sleep.p_max", [](auto& c) -> auto& { return c.sleep.p_max; }),
        real_field("sleep.epoch", [](auto& c) -> auto& { return c.sleep.epoch; }),
        real_field("arrivals.rate", [](auto& c) -> auto& { return c.arrivals.rate; }),
        real_field("arrivals.speed_min", [](auto& c) -> auto& { return c.arrivals.speed_min; }),
        real_field("arrivals.speed_max", [](auto& c) -> auto& { return c.arrivals.speed_max; }),
        real_field("vehicles.authorized_speed", [](auto& c) -> auto& { return c.vehicles.authorized_speed; }),
        real_field("vehicles.radio_range", [](auto& c) -> auto& { return c.vehicles.radio_range; }),
        {"vehicles.preplaced",
         [](C& c, std::string_view k, std::string_view v) { c.vehicles.preplaced = parse_preplaced(k, v); },
         [](const C& c) {
             std::vector<std::string> items;
             for (const auto& p : c.vehicles.preplaced)
             {
                 std::string s = format_double(p.x) + ":" + format_double(p.speed) + ":" + std::to_string(p.lane);
                 if (!p.plate.empty())
                 {
                     s += ":" + p.plate;
                 }
                 items.push_back(s);
             }
             return join(items);
         }},
        real_field("app.beacon_period", [](auto& c) -> auto& { return c.app.beacon_period; }),
        int_field("app.warn_depth", [](auto& c) -> auto& { return c.app.warn_depth; }),
        real_field("app.speed_importance", [](auto& c) -> auto& { return c.app.speed_importance; }),
        real_field("app.beacon_importance", [](auto& c) -> auto& { return c.app.beacon_importance; }),
        real_field("app.comfort_importance", [](auto& c) -> auto& { return c.app.comfort_importance; }),
        count_field("app.message_bits", [](auto& c) -> auto& { return c.app.message_bits; }),
        {"app.accidents",
         [](C& c, std::string_view k, std::string_view v) { c.app.accidents = parse_accidents(k, v); },
         [](const C& c) {
             std::vector<std::string> items;
             for (const auto& a : c.app.accidents)
             {
                 items.push_back(format_double(a.time) + ":" +
                                 (a.vehicle ? std::to_string(*a.vehicle) : std::string("any")));
             }
             return join(items);
         }},
        {"app.thefts",
         [](C& c, std::string_view k, std::string_view v) { c.app.thefts = parse_thefts(k, v); },
         [](const C& c) {
             std::vector<std::string> items;
             for (const auto& t : c.app.thefts)
             {
                 items.push_back(format_double(t.time) + ":" + std::to_string(t.bs) + ":" + t.plate);
             }
             return join(items);
         }},
        real_field("localization.noise_sigma", [](auto& c) -> auto& { return c.noise_sigma; }),
        count_field("sim.seed", [](auto& c) -> auto& { return c.seed; }),
        real_field("sim.duration", [](auto& c) -> auto& { return c.duration; }),
        count_field("sim.event_budget", [](auto& c) -> auto& { return c.event_budget; }),
        count_field("sim.sample_interval", [](auto& c) -> auto& { return c.sample_interval; }),
    };
    return table;
}

void
require(bool ok, const char* key, const std::string& message)
{
    if (!ok)
    {
        throw ConfigInvalid(key, message);
    }
}

} // namespace

std::string
format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::vector<std::string>
scenario_keys()
{
    std::vector<std::string> keys;
    for (const auto& f : fields())
    {
        keys.emplace_back(f.key);
    }
    return keys;
}

void
apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value)
{
    key = trim(key);
    for (const auto& f : fields())
    {
        if (f.key == key)
        {
            f.set(config, key, trim(value));
            return;
        }
    }
    throw ConfigInvalid(std::string(key), "unknown key");
}

void
apply_override(ScenarioConfig& config, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
    {
        throw ConfigInvalid(std::string(trim(assignment)), "override must have the form key=value");
    }
    apply_setting(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

ScenarioConfig
parse_scenario(std::string_view text, ScenarioConfig base)
{
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size())
    {
        const auto nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
        {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty())
        {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
        {
            throw ConfigInvalid("line " + std::to_string(line_no), "expected 'key = value'");
        }
        apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    }
    return base;
}

ScenarioConfig
load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw ScenarioIoError("cannot open scenario file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string
format_scenario(const ScenarioConfig& config)
{
    std::string out;
    for (const auto& f : fields())
    {
        out += std::string(f.key) + " = " + f.get(config) + "\n";
    }
    return out;
}

void
validate(const ScenarioConfig& c)
{
    const auto& L = c.layout;
    require(L.length > 0.0, "layout.length", "must be > 0");
    require(L.lane_count >= 1, "layout.lane_count", "must be >= 1");
    require(L.lane_width > 0.0, "layout.lane_width", "must be > 0");
    require(L.rss_spacing > 0.0, "layout.rss_spacing", "must be > 0");
    require(L.rss_setback >= 0.0, "layout.rss_setback", "must be >= 0");
    require(L.length >= L.rss_spacing, "layout.rss_spacing", "must not exceed layout.length (empty topology)");

    const double lateral = L.rss_offset();
    for (const auto& p : c.bs_positions)
    {
        require(p.x >= 0.0 && p.x <= L.length, "bs.positions", "x must lie within [0, layout.length]");
        require(std::abs(p.y) <= lateral, "bs.positions", "|y| must not exceed road half-width + rss_setback");
    }
    require(!c.bs_positions.empty(), "bs.positions", "at least one base station is required");

    require(c.link.loss_probability >= 0.0 && c.link.loss_probability < 1.0, "link.loss_probability",
            "must lie in [0, 1)");
    require(c.link.data_rate > 0.0, "link.data_rate", "must be > 0");
    require(c.link.default_range > 0.0, "link.range", "must be > 0");
    require(c.queue_capacity >= 1, "mac.queue_capacity", "must be >= 1");

    require(c.initial_energy > 0.0, "energy.initial", "must be > 0");
    require(c.energy.e_elec >= 0.0, "energy.e_elec", "must be >= 0");
    require(c.energy.eps_amp >= 0.0, "energy.eps_amp", "must be >= 0");
    require(c.energy.p_idle >= 0.0, "energy.p_idle", "must be >= 0");
    require(c.energy.p_sleep >= 0.0, "energy.p_sleep", "must be >= 0");
    require(c.energy.p_sleep <= c.energy.p_idle, "energy.p_sleep", "must not exceed energy.p_idle");

    require(c.sleep.w_energy >= 0.0, "sleep.w_energy", "must be >= 0");
    require(c.sleep.w_importance >= 0.0, "sleep.w_importance", "must be >= 0");
    require(c.sleep.w_prev >= 0.0, "sleep.w_prev", "must be >= 0");
    require(c.sleep.p_min >= 0.0, "sleep.p_min", "must be >= 0");
    require(c.sleep.p_min <= c.sleep.p_max, "sleep.p_min", "must not exceed sleep.p_max");
    require(c.sleep.p_max <= 1.0, "sleep.p_max", "must be <= 1");
    require(c.sleep.epoch > 0.0, "sleep.epoch", "must be > 0");

    require(c.arrivals.rate >= 0.0, "arrivals.rate", "must be >= 0");
    require(c.arrivals.speed_min > 0.0, "arrivals.speed_min", "must be > 0");
    require(c.arrivals.speed_min <= c.arrivals.speed_max, "arrivals.speed_min", "must not exceed arrivals.speed_max");

    require(c.vehicles.authorized_speed > 0.0, "vehicles.authorized_speed", "must be > 0");
    require(c.vehicles.radio_range > 0.0, "vehicles.radio_range", "must be > 0");
    for (const auto& v : c.vehicles.preplaced)
    {
        require(v.x >= 0.0 && v.x <= L.length, "vehicles.preplaced", "x must lie within [0, layout.length]");
        require(v.speed > 0.0, "vehicles.preplaced", "speed must be > 0");
        require(v.lane >= 0 && v.lane < L.lane_count, "vehicles.preplaced", "lane must lie in [0, lane_count)");
    }

    require(c.app.beacon_period >= 0.0, "app.beacon_period", "must be >= 0 (0 disables beacons)");
    require(c.app.warn_depth >= 0, "app.warn_depth", "must be >= 0");
    require(c.app.speed_importance >= 0.0 && c.app.speed_importance <= 1.0, "app.speed_importance",
            "must lie in [0, 1]");
    require(c.app.beacon_importance >= 0.0 && c.app.beacon_importance <= 1.0, "app.beacon_importance",
            "must lie in [0, 1]");
    require(c.app.comfort_importance >= 0.0 && c.app.comfort_importance <= 1.0, "app.comfort_importance",
            "must lie in [0, 1]");
    require(c.app.message_bits > 0, "app.message_bits", "must be > 0");
    for (const auto& a : c.app.accidents)
    {
        require(a.time >= 0.0, "app.accidents", "times must be >= 0");
    }
    for (const auto& t : c.app.thefts)
    {
        require(t.time >= 0.0, "app.thefts", "times must be >= 0");
        require(t.bs < c.bs_positions.size(), "app.thefts", "base station index out of range");
    }

    require(c.noise_sigma >= 0.0, "localization.noise_sigma", "must be >= 0");
    require(c.duration > 0.0, "sim.duration", "must be > 0");
    require(c.sample_interval >= 1, "sim.sample_interval", "must be >= 1");
}

} // namespace vasnet
