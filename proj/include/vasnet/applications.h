#ifndef VASNET_APPLICATIONS_H
#define VASNET_APPLICATIONS_H

#include "vasnet/localization.h"
#include "vasnet/message.h"
#include "vasnet/routing.h"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vasnet
{

struct AccidentTrigger
{
    double time{0.0};
    /// Vehicle index; nullopt picks the lowest-index active vehicle.
    std::optional<std::uint32_t> vehicle;
};

struct TheftTrigger
{
    double time{0.0};
    std::uint32_t bs{0};
    std::string plate;
};

struct AppParams
{
    double beacon_period{1.0}; ///< 0 disables beacons
    int warn_depth{3};
    double speed_importance{0.6};
    double beacon_importance{0.2};
    double comfort_importance{0.1};
    std::uint32_t message_bits{1000};
    std::vector<AccidentTrigger> accidents;
    std::vector<TheftTrigger> thefts;
};

void validate_app(const AppParams& app);

inline constexpr double kAccidentImportance = 1.0;

/// Strictly faster than the authorized speed.
bool violates_speed(const VehicularNode& v);

std::optional<ReportedPosition> reported_position(const LocalizationOutcome& loc);

/// Fields every application message shares; class comes from the payload.
Message make_message(std::uint64_t id,
                     Payload payload,
                     const NodeId& origin,
                     Destination dest,
                     double importance,
                     double now,
                     const AppParams& app);

Message make_speed_report(std::uint64_t id,
                          const VehicularNode& v,
                          const LocalizationOutcome& loc,
                          const NodeId& bs,
                          double now,
                          const AppParams& app);

Message make_beacon(std::uint64_t id, const VehicularNode& v, double now, const AppParams& app);

/// The base-station leg of an accident notice.
Message make_accident(std::uint64_t id,
                      const VehicularNode& v,
                      const LocalizationOutcome& loc,
                      const NodeId& bs,
                      double now,
                      const AppParams& app);

/// Upstream ribbon [x - warn_depth * rss_spacing, x) with warn_depth relays.
Geocast warning_region(double accident_x, int warn_depth, double rss_spacing);

Message make_theft_query(std::uint64_t id, const std::string& plate, const NodeId& bs, double now, const AppParams& app);

Message make_theft_reply(std::uint64_t id,
                         const TheftQuery& query,
                         std::uint64_t query_id,
                         const VehicularNode& v,
                         double now,
                         const AppParams& app);

struct SpeedReportRecord
{
    std::uint64_t msg_id{0};
    NodeId vehicle;
    double time{0.0};
    Position true_position;
    LocalizationOutcome localization;
};

struct WarnedVehicle
{
    NodeId vehicle;
    NodeId relay;
    Position vehicle_position;
    Position relay_position;
    double time{0.0};
};

struct AccidentRecord
{
    std::uint64_t msg_id{0};
    NodeId vehicle;
    double time{0.0};
    Position accident_position;
    Geocast region;
    std::optional<NodeId> geocast_entry;
    std::vector<NodeId> relays;
    std::map<NodeId, WarnedVehicle> warned;
};

struct TheftReplyRecord
{
    std::uint64_t reply_id{0};
    NodeId vehicle;
    NodeId relay_rss;
    Position rss_position;
    double delivered_at{0.0};
};

struct TheftRecord
{
    std::uint64_t query_id{0};
    NodeId bs;
    std::string plate;
    double time{0.0};
    int forwards{0};
    std::vector<NodeId> replied_vehicles;
    std::optional<TheftReplyRecord> first_reply;
};

} // namespace vasnet

#endif // VASNET_APPLICATIONS_H
