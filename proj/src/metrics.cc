#include "vasnet/metrics.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace vasnet
{

std::string
format_metric(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string
csv_row(const MetricsRow& r)
{
    std::ostringstream os;
    os << r.events << ',' << format_metric(r.energy_j) << ',' << r.generated << ',' << r.delivered << ','
       << r.drop_noroute << ',' << r.drop_linkloss << ',' << r.drop_overflow << ','
       << format_metric(r.latency_mean_s) << ',' << format_metric(r.hops_mean);
    return os.str();
}

void
write_csv(std::ostream& os, std::span<const MetricsRow> rows)
{
    os << kMetricsHeader << '\n';
    for (const auto& r : rows)
    {
        os << csv_row(r) << '\n';
    }
}

namespace
{

std::string
prefixed_header(const std::string& prefix)
{
    std::string out;
    std::istringstream cols(kMetricsHeader);
    std::string col;
    while (std::getline(cols, col, ','))
    {
        if (!out.empty())
        {
            out += ',';
        }
        out += prefix + col;
    }
    return out;
}

const std::string kBlankRow(8, ',');

} // namespace

void
write_paired_csv(std::ostream& os, std::span<const MetricsRow> sleep, std::span<const MetricsRow> awake)
{
    os << prefixed_header("sleep_") << ',' << prefixed_header("awake_") << '\n';
    const std::size_t n = std::max(sleep.size(), awake.size());
    for (std::size_t i = 0; i < n; ++i)
    {
        os << (i < sleep.size() ? csv_row(sleep[i]) : kBlankRow) << ','
           << (i < awake.size() ? csv_row(awake[i]) : kBlankRow) << '\n';
    }
}

std::string
summary_line(const MetricsRow& r)
{
    std::ostringstream os;
    os << "generated=" << r.generated << " delivered=" << r.delivered << " dropped=" << r.dropped()
       << " (noroute=" << r.drop_noroute << " linkloss=" << r.drop_linkloss << " overflow=" << r.drop_overflow
       << ") in_flight=" << r.in_flight << " energy_j=" << format_metric(r.energy_j);
    return os.str();
}

} // namespace vasnet
