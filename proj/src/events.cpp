#include "mdms/events.hpp"

#include <cstdio>

namespace mdms {

const char* event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::WaypointSet: return "waypoint_set";
        case EventKind::Detection: return "detection";
        case EventKind::LevelSwitch: return "level_switch";
        case EventKind::IndexReset: return "index_reset";
        case EventKind::Confirmation: return "confirmation";
    }
    return "?";
}

std::string event_csv_header() {
    return "t,uav_id,kind,level,level_to,pos_x,pos_y,waypoint_x,waypoint_y,"
           "step_length,sensor_radius,disk_center_x,disk_center_y,disk_radius,"
           "target_id,target_x,target_y";
}

std::string event_to_csv_row(const Event& e) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%.4f,%d,%s,%d,%d,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f,"
                  "%.4f,%d,%.4f,%.4f",
                  e.t, e.uav_id, event_kind_name(e.kind), e.level, e.level_to,
                  e.position.x, e.position.y, e.waypoint.x, e.waypoint.y,
                  e.step_length, e.sensor_radius, e.disk_center.x,
                  e.disk_center.y, e.disk_radius, e.target_id, e.target_pos.x,
                  e.target_pos.y);
    return std::string(buf);
}

}  // namespace mdms
