#ifndef VASNET_GEOMETRY_H
#define VASNET_GEOMETRY_H

namespace vasnet
{

/**
 * A point on the highway plane. x runs along the highway axis (direction of
 * travel), y is the lateral offset from the centerline. Meters.
 */
struct Position
{
    double x{0.0};
    double y{0.0};

    bool operator==(const Position&) const = default;
};

double distance(const Position& a, const Position& b);

double squared_distance(const Position& a, const Position& b);

/// Unit-disk reachability: true iff distance(a, b) <= range.
bool in_range(const Position& a, const Position& b, double range);

bool is_finite(const Position& p);

} // namespace vasnet

#endif // VASNET_GEOMETRY_H
