#include "vasnet/localization.h"

#include <algorithm>
#include <cmath>

namespace vasnet
{

const char*
to_string(LocalizationFailure f)
{
    switch (f)
    {
    case LocalizationFailure::TooFewAnchors:
        return "too-few-anchors";
    case LocalizationFailure::DegenerateGeometry:
        return "degenerate-geometry";
    }
    return "?";
}

std::vector<AnchorObservation>
collect_anchors(const VehicularNode& v, std::span<const RoadsideSensor> rss, double noise_sigma, RandomStream& rng)
{
    std::vector<AnchorObservation> obs;
    for (const auto& s : rss)
    {
        if (!s.awake())
        {
            continue;
        }
        const double d = distance(v.position, s.position);
        if (d > v.radio_range)
        {
            continue;
        }
        const double noise = noise_sigma * rng.normal(0.0, 1.0);
        obs.push_back({s.position, std::max(0.0, d + noise)});
    }
    return obs;
}

namespace
{

struct Row
{
    double ax;
    double ay;
    double b;
    double w;
};

// Rows of the differenced system in coordinates centered on the first anchor.
// Row i carries ranging noise of variance ~ 4 sigma^2 (d_1^2 + d_i^2), hence
// the weight.
std::vector<Row>
linear_rows(std::span<const AnchorObservation> obs)
{
    const Position a1 = obs[0].anchor_position;
    const double d1 = obs[0].measured_distance;
    std::vector<Row> rows;
    rows.reserve(obs.size() - 1);
    for (std::size_t i = 1; i < obs.size(); ++i)
    {
        const double dx = obs[i].anchor_position.x - a1.x;
        const double dy = obs[i].anchor_position.y - a1.y;
        const double di = obs[i].measured_distance;
        const double spread = d1 * d1 + di * di;
        rows.push_back({2.0 * dx, 2.0 * dy, d1 * d1 - di * di + dx * dx + dy * dy, spread > 0.0 ? 1.0 / spread : 1.0});
    }
    return rows;
}

} // namespace

LocalizationResult
trilaterate(std::span<const AnchorObservation> obs)
{
    if (obs.size() < 3)
    {
        throw LocalizationError(LocalizationFailure::TooFewAnchors, "trilateration needs at least 3 anchors");
    }
    const auto rows = linear_rows(obs);

    double n11 = 0.0, n12 = 0.0, n22 = 0.0, r1 = 0.0, r2 = 0.0;
    for (const auto& r : rows)
    {
        n11 += r.w * r.ax * r.ax;
        n12 += r.w * r.ax * r.ay;
        n22 += r.w * r.ay * r.ay;
        r1 += r.w * r.ax * r.b;
        r2 += r.w * r.ay * r.b;
    }

    // Eigenvalues of the symmetric 2x2 normal matrix.
    const double half_trace = 0.5 * (n11 + n22);
    const double lambda_max = half_trace + std::hypot(0.5 * (n11 - n22), n12);
    const double det = n11 * n22 - n12 * n12;
    const double lambda_min = lambda_max > 0.0 ? det / lambda_max : 0.0;
    if (!(lambda_min > 0.0) || lambda_max / lambda_min > kMaxConditionNumber)
    {
        throw LocalizationError(LocalizationFailure::DegenerateGeometry, "anchors are collinear or nearly so");
    }

    const Position a1 = obs[0].anchor_position;
    LocalizationResult out;
    out.estimate = {a1.x + (n22 * r1 - n12 * r2) / det, a1.y + (n11 * r2 - n12 * r1) / det};
    out.anchors_used = static_cast<int>(obs.size());
    out.condition_number = lambda_max / lambda_min;

    double ss = 0.0;
    for (const auto& o : obs)
    {
        const double e = distance(out.estimate, o.anchor_position) - o.measured_distance;
        ss += e * e;
    }
    out.residual = std::sqrt(ss / static_cast<double>(obs.size()));
    return out;
}

double
linearized_residual(std::span<const AnchorObservation> obs, const Position& p)
{
    if (obs.size() < 2)
    {
        return 0.0;
    }
    const Position a1 = obs[0].anchor_position;
    const double px = p.x - a1.x;
    const double py = p.y - a1.y;
    double ss = 0.0;
    for (const auto& r : linear_rows(obs))
    {
        const double e = r.ax * px + r.ay * py - r.b;
        ss += r.w * e * e;
    }
    return ss;
}

LocalizationOutcome
localize(const VehicularNode& v, std::span<const RoadsideSensor> rss, double noise_sigma, RandomStream& rng)
{
    const auto obs = collect_anchors(v, rss, noise_sigma, rng);
    try
    {
        return trilaterate(obs);
    }
    catch (const LocalizationError& e)
    {
        return LocalizationFailed{e.kind(), static_cast<int>(obs.size())};
    }
}

} // namespace vasnet
