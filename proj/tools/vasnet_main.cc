// vasnet: run, sweep, compare or validate a highway scenario.

#include "vasnet/experiments.h"
#include "vasnet/metrics.h"
#include "vasnet/scenario.h"

#include "CLI11.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace vasnet;

namespace
{

constexpr int kExitConfig = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t>
parse_budgets(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ','))
    {
        std::uint64_t v = 0;
        const auto* end = item.data() + item.size();
        const auto [p, ec] = std::from_chars(item.data(), end, v);
        if (ec != std::errc{} || p != end)
        {
            throw UsageError("--budgets: '" + item + "' is not an unsigned integer");
        }
        out.push_back(v);
    }
    if (out.empty())
    {
        throw UsageError("--budgets: empty list");
    }
    try
    {
        validate_budgets(out);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(std::string("--budgets: ") + e.what());
    }
    return out;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Vehicular ad hoc and roadside sensor network simulator"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::vector<std::string> overrides;
    std::string budgets_text;
    std::optional<std::uint64_t> seed;

    auto common = [&](CLI::App* sub, bool writes) {
        sub->add_option("--scenario", scenario_path, "Scenario file")->required();
        sub->add_option("--override", overrides, "key=value, applied in order after the file")
            ->take_all()
            ->allow_extra_args(false);
        sub->add_option("--seed", seed, "Shorthand for --override sim.seed=<u64>");
        if (writes)
        {
            sub->add_option("--out", out_path, "Output CSV (default: standard output)");
        }
    };
    auto* run_cmd = app.add_subcommand("run", "Run one scenario and write its metrics series");
    auto* sweep_cmd = app.add_subcommand("sweep", "Final metrics row for each event budget");
    auto* compare_cmd = app.add_subcommand("compare", "Paired run against the always-awake baseline");
    auto* validate_cmd = app.add_subcommand("validate", "Check a scenario and print it normalized");
    common(run_cmd, true);
    common(sweep_cmd, true);
    common(compare_cmd, true);
    common(validate_cmd, false);
    sweep_cmd->add_option("--budgets", budgets_text, "Comma-separated, strictly increasing")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try
    {
        ScenarioConfig cfg = load_scenario(scenario_path);
        for (const auto& o : overrides)
        {
            apply_override(cfg, o);
        }
        if (seed)
        {
            cfg.seed = *seed;
        }
        validate(cfg);

        if (*validate_cmd)
        {
            std::cout << format_scenario(cfg);
            return 0;
        }

        std::ofstream file;
        if (!out_path.empty())
        {
            file.open(out_path);
            if (!file)
            {
                throw ScenarioIoError("--out: cannot open " + out_path);
            }
        }
        std::ostream& out = out_path.empty() ? std::cout : file;
        // Keep stdout pure CSV when the table goes there.
        std::ostream& info = out_path.empty() ? std::cerr : std::cout;

        if (*run_cmd)
        {
            const MetricsSeries series = run(cfg);
            write_csv(out, series.rows);
            info << summary_line(series.final_row()) << '\n';
        }
        else if (*sweep_cmd)
        {
            const auto budgets = parse_budgets(budgets_text);
            const auto points = sweep_events(cfg, budgets);
            std::vector<MetricsRow> rows;
            for (const auto& p : points)
            {
                rows.push_back(p.final_row);
            }
            write_csv(out, rows);
            info << summary_line(rows.back()) << '\n';
        }
        else if (*compare_cmd)
        {
            const PairedRun pr = compare_baseline(cfg);
            write_paired_csv(out, pr.sleep.rows, pr.awake.rows);
            info << "sleep:  " << summary_line(pr.sleep.final_row()) << '\n';
            info << "awake:  " << summary_line(pr.awake.final_row()) << '\n';
        }
        out.flush();
        if (!out)
        {
            throw ScenarioIoError("write failed");
        }
        return 0;
    }
    catch (const ConfigInvalid& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const ScenarioIoError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
