#include "vasnet/geometry.h"

#include <cmath>

namespace vasnet
{

double
squared_distance(const Position& a, const Position& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double
distance(const Position& a, const Position& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool
in_range(const Position& a, const Position& b, double range)
{
    return distance(a, b) <= range;
}

bool
is_finite(const Position& p)
{
    return std::isfinite(p.x) && std::isfinite(p.y);
}

} // namespace vasnet
