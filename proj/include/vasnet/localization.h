#ifndef VASNET_LOCALIZATION_H
#define VASNET_LOCALIZATION_H

#include "vasnet/rng.h"
#include "vasnet/topology.h"

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace vasnet
{

struct AnchorObservation
{
    Position anchor_position;
    double measured_distance{0.0};
};

struct LocalizationResult
{
    Position estimate;
    double residual{0.0}; ///< RMS of |distance(estimate, a_i) - d_i|
    int anchors_used{0};
    double condition_number{0.0};
};

enum class LocalizationFailure
{
    TooFewAnchors,
    DegenerateGeometry,
};

const char* to_string(LocalizationFailure f);

class LocalizationError : public std::runtime_error
{
  public:
    LocalizationError(LocalizationFailure kind, const char* what) : std::runtime_error(what), m_kind(kind) {}
    LocalizationFailure kind() const { return m_kind; }

  private:
    LocalizationFailure m_kind;
};

struct LocalizationFailed
{
    LocalizationFailure reason{LocalizationFailure::TooFewAnchors};
    int repliers{0};
};

using LocalizationOutcome = std::variant<LocalizationResult, LocalizationFailed>;

/// Normal matrices with a condition number above this are rejected.
inline constexpr double kMaxConditionNumber = 1e8;

/**
 * One observation per awake sensor within the vehicle's radio range, in
 * index order. The ranging error is N(0, noise_sigma^2); one normal draw is
 * taken per replier even when sigma is zero. Distances are clamped at 0.
 */
std::vector<AnchorObservation> collect_anchors(const VehicularNode& v,
                                               std::span<const RoadsideSensor> rss,
                                               double noise_sigma,
                                               RandomStream& rng);

/**
 * Linearized least-squares trilateration. Subtracting the first range
 * equation from the others gives rows 2(a_i - a_1) . p = d_1^2 - d_i^2 +
 * |a_i|^2 - |a_1|^2, solved through the 2x2 normal equations. Row i is
 * weighted by 1 / (d_1^2 + d_i^2), the inverse of its ranging-noise scale.
 * Coordinates are taken relative to a_1 before forming the system.
 *
 * Throws LocalizationError (TooFewAnchors, DegenerateGeometry).
 */
LocalizationResult trilaterate(std::span<const AnchorObservation> obs);

/// Weighted sum of squared residuals of the linearized system at `p`.
double linearized_residual(std::span<const AnchorObservation> obs, const Position& p);

LocalizationOutcome localize(const VehicularNode& v,
                             std::span<const RoadsideSensor> rss,
                             double noise_sigma,
                             RandomStream& rng);

} // namespace vasnet

#endif // VASNET_LOCALIZATION_H
