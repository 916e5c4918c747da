#include "mdms/policy_sss.hpp"

#include "mdms/waypoints.hpp"

#include <stdexcept>

namespace mdms {

void SssConfig::validate() const {
    process.validate();
    if (!(step_length > 0.0))
        throw std::invalid_argument("sss step length must be > 0");
    if (!(confirmation_radius > 0.0))
        throw std::invalid_argument("sss confirmation radius must be > 0");
}

SssPolicy::SssPolicy(SssConfig config, Region region)
    : config_(config), region_(region) {
    config_.validate();
    region_.validate();
}

std::string SssPolicy::name() const { return "sss(" + config_.process.name() + ")"; }

void SssPolicy::reset(std::span<const Vec2> start_positions) {
    agents_.assign(start_positions.size(), AgentState{});
}

PolicyAction SssPolicy::step(const AgentObs& obs, SensorView& view,
                             EventSink& events, RngStream& rng) {
    AgentState& st = agents_.at(obs.agent_id);

    if (const auto confirmed = view.try_confirm(config_.confirmation_radius)) {
        events.push(Event{.t = obs.t,
                          .uav_id = obs.agent_id,
                          .kind = EventKind::Confirmation,
                          .level = 1,
                          .position = obs.position,
                          .sensor_radius = config_.confirmation_radius,
                          .target_id = confirmed->target_id,
                          .target_pos = confirmed->target_position});
    }

    if (!st.waypoint_valid || obs.waypoint_reached) {
        st.waypoint = next_waypoint(obs.position, config_.step_length,
                                    config_.process, region_, rng);
        st.waypoint_valid = true;
        events.push(Event{.t = obs.t,
                          .uav_id = obs.agent_id,
                          .kind = EventKind::WaypointSet,
                          .level = 1,
                          .position = obs.position,
                          .waypoint = st.waypoint,
                          .step_length = config_.step_length});
        return PolicyAction::set_waypoint(st.waypoint);
    }
    return PolicyAction::hold();
}

}  // namespace mdms
