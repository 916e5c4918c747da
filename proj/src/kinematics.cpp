#include "mdms/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace mdms {

UavKinematics step_kinematics(const UavKinematics& state, double dt) {
    if (!(dt > 0.0)) throw std::domain_error("step_kinematics: dt must be > 0");
    if (!(state.tau > 0.0)) throw std::domain_error("step_kinematics: tau must be > 0");

    const double decay = std::exp(-dt / state.tau);
    const Vec2 lag = state.velocity - state.command;

    UavKinematics next = state;
    next.position = state.position + state.command * dt + lag * (state.tau * (1.0 - decay));
    next.velocity = state.command + lag * decay;
    return next;
}

Vec2 pursuit_command(const UavKinematics& state, const Vec2& waypoint) {
    const Vec2 to_wp = waypoint - state.position;
    const double dist = to_wp.norm();
    if (dist == 0.0) return state.command;
    return to_wp * (state.speed / dist);
}

}  // namespace mdms
