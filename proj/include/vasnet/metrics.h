#ifndef VASNET_METRICS_H
#define VASNET_METRICS_H

#include "vasnet/engine.h"

#include <ostream>
#include <span>
#include <string>

namespace vasnet
{

inline constexpr const char* kMetricsHeader =
    "events,energy_j,generated,delivered,drop_noroute,drop_linkloss,drop_overflow,latency_mean_s,hops_mean";

/// %.9g
std::string format_metric(double v);

std::string csv_row(const MetricsRow& r);
void write_csv(std::ostream& os, std::span<const MetricsRow> rows);

/// Columns prefixed sleep_/awake_; the shorter series is padded with blanks.
void write_paired_csv(std::ostream& os, std::span<const MetricsRow> sleep, std::span<const MetricsRow> awake);

/// One line: generated/delivered/dropped/energy of the final row.
std::string summary_line(const MetricsRow& r);

} // namespace vasnet

#endif // VASNET_METRICS_H
