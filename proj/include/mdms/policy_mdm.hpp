#pragma once

#include "mdms/policy.hpp"
#include "mdms/processes.hpp"
#include "mdms/region.hpp"

#include <vector>

namespace mdms {

/// Exponential dwell-index schedule shared by the confirmation index C_I
/// (level n) and the detection indexes D_I (levels 2..n-1):
///   index(t_s) = gamma + (c_max - c_min) * exp(-t_s / kappa)
/// The level is abandoned once the index falls below c_min, which happens
/// after kappa * ln((c_max - c_min)/(c_min - gamma)) seconds of dwell.
struct IndexConfig {
    double c_max = 0.95;
    double c_min = 0.10;
    double gamma = 0.05;
    double kappa = 100.0;  // seconds

    void validate() const;
    double value_at(double dwell_seconds) const;
    bool expired_at(double dwell_seconds) const;
    /// Dwell time at which the index crosses c_min.
    double expiry_dwell() const;
};

/// One level of the knowledge base: the sensor used at this level, the
/// stochastic process generating directions and the fixed step length.
struct SearchLevel {
    SensorSpec sensor;
    StochasticProcess process;
    double step_length = 0.0;  // meters
    IndexConfig index;         // unused at level 1
};

/// Static per-mission knowledge base: sensor repository plus search
/// algorithm repository, one entry per level. Step lengths are
/// non-increasing with level and each step fits the previous level's
/// sensing radius (delta_{k+1} <= r_k), so every level stays inside the
/// localization disk its predecessor established.
struct KnowledgeBase {
    std::vector<SearchLevel> levels;

    void validate() const;
    int level_count() const { return static_cast<int>(levels.size()); }
    const SearchLevel& at(int level) const { return levels[level - 1]; }

    /// Standard two-level suite: detection radius r1, confirmation radius
    /// r2, step lengths delta1/delta2, one process per level.
    static KnowledgeBase two_level(const Region& region,
                                   const StochasticProcess& level1_process,
                                   const StochasticProcess& level2_process,
                                   double delta1, double delta2, double r1,
                                   double r2, const IndexConfig& index = {});
};

/**
 * Metacognitive multi-level search policy.
 *
 * Each agent cycles through n search levels. Level k < n flies stochastic
 * waypoints with (process_k, delta_k) and the level-k detection sensor;
 * a detection drops a localization disk of radius r_k at the current
 * position and advances to level k+1, whose waypoints are confined to
 * that disk. Level n uses the confirmation sensor; a confirmation — or a
 * dwell index falling below its floor at any level >= 2 — returns the
 * agent to level 1. No state is shared between agents.
 */
class MdmPolicy final : public Policy {
public:
    MdmPolicy(KnowledgeBase kb, Region region);

    void reset(std::span<const Vec2> start_positions) override;
    PolicyAction step(const AgentObs& obs, SensorView& view, EventSink& events,
                      RngStream& rng) override;
    std::string name() const override;

    int agent_level(int agent_id) const { return agents_[agent_id].level; }
    const KnowledgeBase& knowledge_base() const { return kb_; }

private:
    struct AgentState {
        int level = 1;
        double level_entry_t = 0.0;
        Vec2 disk_center{};
        double disk_radius = 0.0;
        Vec2 waypoint{};
        bool waypoint_valid = false;
        bool detect_latched = false;
        Vec2 latch_pos{};
    };

    Vec2 draw_waypoint(const AgentState& st, const Vec2& from, RngStream& rng) const;
    void enter_level(AgentState& st, int level, double t);

    KnowledgeBase kb_;
    Region region_;
    std::vector<AgentState> agents_;
};

}  // namespace mdms
