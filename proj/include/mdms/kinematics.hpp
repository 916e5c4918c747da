#pragma once

#include "mdms/vec2.hpp"

namespace mdms {

/// UAV planar kinematic state under a first-order closed-loop velocity
/// lag: xdot = v, vdot = (q - v)/tau, with q the commanded velocity.
struct UavKinematics {
    Vec2 position{};
    Vec2 velocity{};
    Vec2 command{};      // commanded velocity q
    double speed = 20.0; // cruise speed setpoint, m/s
    double tau = 0.33;   // velocity-loop time constant, seconds
};

/// Advances the lag dynamics by dt using the exact discretization of the
/// linear flow:
///   v(t+dt) = q + (v - q) e^(-dt/tau)
///   x(t+dt) = x + q dt + (v - q) tau (1 - e^(-dt/tau))
/// Exactly compositional: two steps of dt equal one step of 2 dt.
UavKinematics step_kinematics(const UavKinematics& state, double dt);

/// Pure-pursuit command toward a waypoint at cruise speed:
/// q = speed * (waypoint - x) / |waypoint - x|. If the UAV sits exactly on
/// the waypoint, the previous command is held (the waypoint is captured
/// this step anyway).
Vec2 pursuit_command(const UavKinematics& state, const Vec2& waypoint);

}  // namespace mdms
