#pragma once

#include "mdms/policy.hpp"
#include "mdms/region.hpp"

#include <vector>

namespace mdms {

enum class PsoVariant { Pso, Spso, Arpso };

/// Social-cognitive baselines: standard PSO, rotation-invariant SPSO and
/// attractive/repulsive ARPSO. Fitness is the proportional-strength
/// signal to the nearest active target; the global best is the shared
/// communication channel. Velocities are capped at the UAV cruise speed
/// and executed through the vehicle kinematics at that speed.
struct PsoConfig {
    PsoVariant variant = PsoVariant::Pso;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    double speed_cap = 20.0;           // m/s, equals the cruise speed
    double confirmation_radius = 0.0;  // meters
    // ARPSO diversity hysteresis: repulsion below diversity_low (meters of
    // mean distance to the swarm centroid), attraction restored above
    // diversity_high_frac of the region diagonal.
    double diversity_low = 5.0;
    double diversity_high_frac = 0.25;

    void validate() const;
};

class PsoPolicy final : public Policy {
public:
    PsoPolicy(PsoConfig config, Region region);

    void reset(std::span<const Vec2> start_positions) override;
    PolicyAction step(const AgentObs& obs, SensorView& view, EventSink& events,
                      RngStream& rng) override;
    std::string name() const override;

    bool repulsion_phase() const { return repulsion_; }
    double swarm_diversity() const;
    double gbest_fitness() const { return gbest_fitness_; }
    const Vec2& gbest_position() const { return gbest_position_; }

private:
    struct AgentState {
        Vec2 position{};  // last observed position, for the social channel
        Vec2 velocity{};
        Vec2 best_position{};
        double best_fitness = -1.0;
        bool initialized = false;
    };

    void invalidate_bests();
    Vec2 velocity_update(AgentState& st, const AgentObs& obs, double fitness,
                         RngStream& rng);

    PsoConfig config_;
    Region region_;
    std::vector<AgentState> agents_;
    Vec2 gbest_position_{};
    double gbest_fitness_ = -1.0;
    bool repulsion_ = false;
};

}  // namespace mdms
