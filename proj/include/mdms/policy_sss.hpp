#pragma once

#include "mdms/policy.hpp"
#include "mdms/processes.hpp"
#include "mdms/region.hpp"

#include <vector>

namespace mdms {

/// Single-sensor self-cognitive search: one stochastic process, one fixed
/// step length, confirmation sensor always active, waypoints over the
/// whole region. The US / BS / LS baselines are this policy with the
/// Uniform / Brownian / Levy process.
struct SssConfig {
    StochasticProcess process;
    double step_length = 0.0;          // meters
    double confirmation_radius = 0.0;  // meters

    void validate() const;
};

class SssPolicy final : public Policy {
public:
    SssPolicy(SssConfig config, Region region);

    void reset(std::span<const Vec2> start_positions) override;
    PolicyAction step(const AgentObs& obs, SensorView& view, EventSink& events,
                      RngStream& rng) override;
    std::string name() const override;

private:
    struct AgentState {
        Vec2 waypoint{};
        bool waypoint_valid = false;
    };

    SssConfig config_;
    Region region_;
    std::vector<AgentState> agents_;
};

}  // namespace mdms
