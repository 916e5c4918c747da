#pragma once

#include "mdms/events.hpp"
#include "mdms/kinematics.hpp"
#include "mdms/policy.hpp"
#include "mdms/policy_mdm.hpp"
#include "mdms/policy_pso.hpp"
#include "mdms/policy_sss.hpp"
#include "mdms/region.hpp"
#include "mdms/world.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mdms {

/// Efficiency runs for a fixed horizon and reports targets confirmed.
/// Completeness runs until every real target is confirmed (or the cap)
/// and reports the finishing time. Both does a single completeness-style
/// run and reads the horizon count off the same ledger, which is valid
/// because confirmations before the horizon do not depend on anything
/// after it.
enum class MissionMode { Efficiency, Completeness, Both };

enum class PolicyFamily { Mdm, Sss, Pso };

/// Value-type policy description, buildable from config files and cheap
/// to copy into sweep cells. Only the member matching `family` is used.
struct PolicySpec {
    PolicyFamily family = PolicyFamily::Sss;
    KnowledgeBase mdm;
    SssConfig sss;
    PsoConfig pso;

    static PolicySpec make_mdm(KnowledgeBase kb);
    static PolicySpec make_sss(SssConfig config);
    static PolicySpec make_pso(PsoConfig config);

    std::unique_ptr<Policy> build(const Region& region) const;
    /// The built policy's name(), e.g. "mdm(levy+brownian)" or "us".
    std::string label(const Region& region) const;
};

struct MissionConfig {
    Region region{};
    std::vector<TargetSpec> targets;
    DynamicDrawMode draw_mode = DynamicDrawMode::PerAxis;
    double target_step = 0.1;  // dynamic-target sampling interval, seconds

    int n_uavs = 12;
    double uav_speed = 20.0;     // m/s
    double tau = 0.33;           // velocity-loop time constant, seconds
    double dt = 0.1;             // simulation step, seconds
    double capture_radius = 20.0;  // waypoint-reached distance, meters

    MissionMode mode = MissionMode::Efficiency;
    double horizon = 1000.0;          // seconds
    double completion_cap = 50000.0;  // seconds; beyond it a run is censored

    PolicySpec policy;

    bool record_events = false;
    bool runtime_checks = true;

    void validate() const;
};

/// Per-run outcome. `t_nc` counts confirmations no later than the
/// horizon; `t_s` is the time the last real target was confirmed, absent
/// for efficiency-only runs and for censored runs.
struct RunRecord {
    std::uint64_t seed = 0;
    int t_nc = 0;
    std::optional<double> t_s;
    bool censored = false;
    std::vector<ConfirmationRecord> confirmations;
    EventLog events;
    double wall_seconds = 0.0;
};

/// n points evenly spaced along the region boundary, walking
/// counterclockwise from the origin corner. Deterministic in n.
std::vector<Vec2> perimeter_positions(const Region& region, int n);

/// Executes one mission. Deterministic given (cfg, seed): every random
/// draw comes from streams derived from `seed` (one per agent plus one
/// for target motion), so records are bitwise reproducible.
RunRecord run_mission(const MissionConfig& cfg, std::uint64_t seed);

/// Same, driving an externally built policy instead of cfg.policy. The
/// policy is reset before the run.
RunRecord run_mission(const MissionConfig& cfg, std::uint64_t seed,
                      Policy& policy);

/// Audits a recorded event log: every confirmation event must place the
/// confirming agent strictly within the sensor radius of the target it
/// confirmed, and the events must match the confirmation ledger one to
/// one. Returns the number of violations (0 for a faithful log).
int count_causality_violations(const RunRecord& rec);

}  // namespace mdms
