#pragma once

#include "mdms/vec2.hpp"

#include <string>
#include <vector>

namespace mdms {

enum class EventKind {
    WaypointSet,   // new waypoint drawn (carries level, step length, disk)
    Detection,     // detection sensor fired
    LevelSwitch,   // search level changed (carries from/to and reason)
    IndexReset,    // dwell index fell below its floor
    Confirmation,  // target confirmed (carries target id)
};

const char* event_kind_name(EventKind kind);

/// One timestamped mission event. Fields beyond (t, uav, kind) are
/// populated per kind; unused ones stay at their defaults.
struct Event {
    double t = 0.0;
    int uav_id = -1;
    EventKind kind = EventKind::WaypointSet;
    int level = 0;          // level in effect when the event fired
    int level_to = 0;       // LevelSwitch only
    Vec2 position{};        // UAV position at the event
    Vec2 waypoint{};        // WaypointSet only
    double step_length = 0.0;    // WaypointSet only
    double sensor_radius = 0.0;  // Detection / Confirmation
    Vec2 disk_center{};          // level >= 2 context
    double disk_radius = 0.0;
    int target_id = -1;     // Confirmation only
    Vec2 target_pos{};      // Confirmation only: target location at confirm time
};

using EventLog = std::vector<Event>;

/// Append-only event channel handed to policies. Write-only by design:
/// it cannot feed information back into a policy.
class EventSink {
public:
    EventSink() = default;
    explicit EventSink(EventLog* log) : log_(log) {}

    bool enabled() const { return log_ != nullptr; }
    void push(const Event& e) {
        if (log_ != nullptr) log_->push_back(e);
    }

private:
    EventLog* log_ = nullptr;
};

std::string event_to_csv_row(const Event& e);
std::string event_csv_header();

}  // namespace mdms
