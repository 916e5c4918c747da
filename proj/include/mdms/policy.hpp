#pragma once

#include "mdms/events.hpp"
#include "mdms/rng.hpp"
#include "mdms/sensing.hpp"
#include "mdms/vec2.hpp"

#include <memory>
#include <span>
#include <string>

namespace mdms {

/// Per-step observation of an agent's own state. This, the SensorView and
/// the agent's private rng stream are all a policy may read.
struct AgentObs {
    double t = 0.0;
    int agent_id = -1;
    Vec2 position{};
    Vec2 velocity{};
    bool waypoint_reached = false;  // within capture radius of the current waypoint
    bool has_waypoint = false;
};

/// What a policy asks the vehicle layer to do this step.
struct PolicyAction {
    enum class Type { Hold, SetWaypoint, SetVelocity };
    Type type = Type::Hold;
    Vec2 value{};

    static PolicyAction hold() { return {}; }
    static PolicyAction set_waypoint(const Vec2& wp) {
        return {Type::SetWaypoint, wp};
    }
    static PolicyAction set_velocity(const Vec2& v) {
        return {Type::SetVelocity, v};
    }
};

/// A search policy drives all agents of one mission. step() is called once
/// per agent per time step, in fixed agent order. Self-cognitive policies
/// must confine step(i) to the i-th agent's slice of their state; the
/// PSO family additionally maintains its shared best-known channel, which
/// is exactly its social-cognition component.
class Policy {
public:
    virtual ~Policy() = default;

    virtual void reset(std::span<const Vec2> start_positions) = 0;
    virtual PolicyAction step(const AgentObs& obs, SensorView& view,
                              EventSink& events, RngStream& rng) = 0;
    virtual std::string name() const = 0;
};

}  // namespace mdms
