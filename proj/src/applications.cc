#include "vasnet/applications.h"

#include <cmath>
#include <stdexcept>

namespace vasnet
{

void
validate_app(const AppParams& app)
{
    if (!(app.beacon_period >= 0.0) || !std::isfinite(app.beacon_period))
    {
        throw std::invalid_argument("app.beacon_period must be >= 0");
    }
    if (app.warn_depth < 0)
    {
        throw std::invalid_argument("app.warn_depth must be >= 0");
    }
    for (double w : {app.speed_importance, app.beacon_importance, app.comfort_importance})
    {
        // Accident notices carry 1.0, so nothing else may outrank them.
        if (!(w >= 0.0 && w <= kAccidentImportance))
        {
            throw std::invalid_argument("app importances must lie in [0, 1]");
        }
    }
    if (app.message_bits == 0)
    {
        throw std::invalid_argument("app.message_bits must be > 0");
    }
    for (const auto& a : app.accidents)
    {
        if (!(a.time >= 0.0))
        {
            throw std::invalid_argument("app.accidents times must be >= 0");
        }
    }
    for (const auto& t : app.thefts)
    {
        if (!(t.time >= 0.0))
        {
            throw std::invalid_argument("app.thefts times must be >= 0");
        }
    }
}

bool
violates_speed(const VehicularNode& v)
{
    return v.velocity > v.authorized_speed;
}

std::optional<ReportedPosition>
reported_position(const LocalizationOutcome& loc)
{
    if (const auto* r = std::get_if<LocalizationResult>(&loc))
    {
        return ReportedPosition{r->estimate, r->residual, r->anchors_used};
    }
    return std::nullopt;
}

Message
make_message(std::uint64_t id,
             Payload payload,
             const NodeId& origin,
             Destination dest,
             double importance,
             double now,
             const AppParams& app)
{
    Message m;
    m.id = id;
    m.cls = class_for(payload);
    m.payload = std::move(payload);
    m.origin = origin;
    m.destination = dest;
    m.size_bits = app.message_bits;
    m.importance = importance;
    m.created_at = now;
    m.record_hop(origin);
    return m;
}

Message
make_speed_report(std::uint64_t id,
                  const VehicularNode& v,
                  const LocalizationOutcome& loc,
                  const NodeId& bs,
                  double now,
                  const AppParams& app)
{
    SpeedViolationReport r{v.id, v.velocity, v.authorized_speed, reported_position(loc), now};
    return make_message(id, r, v.id, ToBaseStation{bs}, app.speed_importance, now, app);
}

Message
make_beacon(std::uint64_t id, const VehicularNode& v, double now, const AppParams& app)
{
    return make_message(id, Beacon{v.position, v.velocity}, v.id, BroadcastDest{}, app.beacon_importance, now, app);
}

Message
make_accident(std::uint64_t id,
              const VehicularNode& v,
              const LocalizationOutcome& loc,
              const NodeId& bs,
              double now,
              const AppParams& app)
{
    AccidentNotice n{v.id, reported_position(loc), now};
    return make_message(id, n, v.id, ToBaseStation{bs}, kAccidentImportance, now, app);
}

Geocast
warning_region(double accident_x, int warn_depth, double rss_spacing)
{
    return Geocast{Direction::Upstream, accident_x - warn_depth * rss_spacing, accident_x, warn_depth};
}

Message
make_theft_query(std::uint64_t id, const std::string& plate, const NodeId& bs, double now, const AppParams& app)
{
    return make_message(id, TheftQuery{plate, bs}, bs, BroadcastDest{}, app.comfort_importance, now, app);
}

Message
make_theft_reply(std::uint64_t id,
                 const TheftQuery& query,
                 std::uint64_t query_id,
                 const VehicularNode& v,
                 double now,
                 const AppParams& app)
{
    TheftReply r{query.plate, query_id, v.id, std::nullopt, std::nullopt};
    return make_message(id, r, v.id, ToBaseStation{query.issuing_bs}, app.comfort_importance, now, app);
}

} // namespace vasnet
