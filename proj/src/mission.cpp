#include "mdms/mission.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace mdms {
namespace {

// Stream id for target motion, outside the agent id range.
constexpr std::uint64_t kWorldStream = ~0ULL;

}  // namespace

PolicySpec PolicySpec::make_mdm(KnowledgeBase kb) {
    PolicySpec s;
    s.family = PolicyFamily::Mdm;
    s.mdm = std::move(kb);
    return s;
}

PolicySpec PolicySpec::make_sss(SssConfig config) {
    PolicySpec s;
    s.family = PolicyFamily::Sss;
    s.sss = config;
    return s;
}

PolicySpec PolicySpec::make_pso(PsoConfig config) {
    PolicySpec s;
    s.family = PolicyFamily::Pso;
    s.pso = config;
    return s;
}

std::unique_ptr<Policy> PolicySpec::build(const Region& region) const {
    switch (family) {
        case PolicyFamily::Mdm:
            return std::make_unique<MdmPolicy>(mdm, region);
        case PolicyFamily::Sss:
            return std::make_unique<SssPolicy>(sss, region);
        case PolicyFamily::Pso:
            return std::make_unique<PsoPolicy>(pso, region);
    }
    throw std::logic_error("mission: unknown policy family");
}

std::string PolicySpec::label(const Region& region) const {
    return build(region)->name();
}

void MissionConfig::validate() const {
    region.validate();
    if (n_uavs < 1) throw std::domain_error("mission: n_uavs must be >= 1");
    if (!(uav_speed > 0.0))
        throw std::domain_error("mission: uav_speed must be positive");
    if (!(tau > 0.0)) throw std::domain_error("mission: tau must be positive");
    if (!(dt > 0.0)) throw std::domain_error("mission: dt must be positive");
    if (capture_radius < 0.0)
        throw std::domain_error("mission: capture_radius must be non-negative");
    if (!(horizon > 0.0))
        throw std::domain_error("mission: horizon must be positive");
    if (mode != MissionMode::Efficiency && !(completion_cap > 0.0))
        throw std::domain_error("mission: completion_cap must be positive");
    if (!(target_step > 0.0))
        throw std::domain_error("mission: target_step must be positive");
    const double ratio = target_step / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9)
        throw std::domain_error(
            "mission: target_step must be an integer multiple of dt");
}

std::vector<Vec2> perimeter_positions(const Region& region, int n) {
    if (n < 1) throw std::domain_error("mission: n_uavs must be >= 1");
    const double l = region.length;
    const double w = region.width;
    const double perimeter = 2.0 * (l + w);
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = perimeter * static_cast<double>(i) / static_cast<double>(n);
        if (s < l) {
            out.push_back({s, 0.0});
        } else if (s < l + w) {
            out.push_back({l, s - l});
        } else if (s < 2.0 * l + w) {
            out.push_back({l - (s - l - w), w});
        } else {
            out.push_back({0.0, w - (s - 2.0 * l - w)});
        }
    }
    return out;
}

RunRecord run_mission(const MissionConfig& cfg, std::uint64_t seed) {
    const auto policy = cfg.policy.build(cfg.region);
    return run_mission(cfg, seed, *policy);
}

RunRecord run_mission(const MissionConfig& cfg, std::uint64_t seed,
                      Policy& policy) {
    cfg.validate();
    const auto wall_start = std::chrono::steady_clock::now();

    World world(cfg.region, cfg.targets, cfg.draw_mode);

    const std::vector<Vec2> starts = perimeter_positions(cfg.region, cfg.n_uavs);
    std::vector<UavKinematics> uavs(static_cast<std::size_t>(cfg.n_uavs));
    for (int i = 0; i < cfg.n_uavs; ++i) {
        uavs[i].position = starts[i];
        uavs[i].speed = cfg.uav_speed;
        uavs[i].tau = cfg.tau;
    }
    std::vector<Vec2> waypoints(static_cast<std::size_t>(cfg.n_uavs));
    std::vector<char> has_waypoint(static_cast<std::size_t>(cfg.n_uavs), 0);

    policy.reset(starts);

    std::vector<RngStream> agent_rng;
    agent_rng.reserve(static_cast<std::size_t>(cfg.n_uavs));
    for (int i = 0; i < cfg.n_uavs; ++i)
        agent_rng.emplace_back(seed, static_cast<std::uint64_t>(i));
    RngStream world_rng(seed, kWorldStream);

    EventLog log;
    EventSink sink(cfg.record_events ? &log : nullptr);

    const long long dynamic_every = std::llround(cfg.target_step / cfg.dt);
    const long long horizon_steps = std::llround(cfg.horizon / cfg.dt);
    const long long cap_steps = std::llround(cfg.completion_cap / cfg.dt);
    const long long max_steps =
        cfg.mode == MissionMode::Efficiency ? horizon_steps : cap_steps;

    for (long long s = 0; s < max_steps; ++s) {
        if (cfg.mode != MissionMode::Efficiency && world.all_real_confirmed())
            break;
        const double t = static_cast<double>(s) * cfg.dt;
        if (s > 0 && s % dynamic_every == 0)
            world.step_dynamic(world_rng, cfg.target_step);

        for (int i = 0; i < cfg.n_uavs; ++i) {
            UavKinematics& uav = uavs[i];
            const bool reached =
                has_waypoint[i] &&
                distance(uav.position, waypoints[i]) < cfg.capture_radius;
            const AgentObs obs{t,            i,
                               uav.position, uav.velocity,
                               reached,      has_waypoint[i] != 0};
            SensorView view(world, t, i, uav.position);
            const PolicyAction act = policy.step(obs, view, sink, agent_rng[i]);
            if (cfg.runtime_checks && view.detect_queries() > 0 &&
                view.confirm_queries() > 0)
                throw std::logic_error(
                    "mission: policy interrogated two sensors in one step");

            switch (act.type) {
                case PolicyAction::Type::SetWaypoint:
                    waypoints[i] = act.value;
                    has_waypoint[i] = 1;
                    break;
                case PolicyAction::Type::SetVelocity:
                    has_waypoint[i] = 0;
                    uav.command = act.value;
                    break;
                case PolicyAction::Type::Hold:
                    break;
            }
            if (has_waypoint[i])
                uav.command = pursuit_command(uav, waypoints[i]);
            if (cfg.runtime_checks) {
                const double q = uav.command.norm();
                if (q > 0.0 && std::abs(q - cfg.uav_speed) > 1e-6 * cfg.uav_speed)
                    throw std::logic_error(
                        "mission: commanded speed off the cruise setpoint");
            }
            uav = step_kinematics(uav, cfg.dt);
            // Region containment is absorbing; see the waypoint rules for
            // why commands essentially never push outward for long.
            uav.position = cfg.region.clamp(uav.position);
        }
    }

    RunRecord rec;
    rec.seed = seed;
    for (const auto& c : world.ledger())
        if (c.time <= cfg.horizon) ++rec.t_nc;
    if (cfg.mode != MissionMode::Efficiency) {
        if (world.all_real_confirmed()) {
            rec.t_s =
                world.ledger().empty() ? 0.0 : world.ledger().back().time;
        } else {
            rec.censored = true;
        }
    }
    rec.confirmations = world.ledger();
    rec.events = std::move(log);
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      wall_start)
            .count();
    return rec;
}

int count_causality_violations(const RunRecord& rec) {
    int violations = 0;
    std::size_t ledger_idx = 0;
    for (const Event& e : rec.events) {
        if (e.kind != EventKind::Confirmation) continue;
        if (!(distance(e.position, e.target_pos) < e.sensor_radius))
            ++violations;
        if (ledger_idx >= rec.confirmations.size()) {
            ++violations;
            continue;
        }
        const ConfirmationRecord& c = rec.confirmations[ledger_idx++];
        if (c.target_id != e.target_id || c.uav_id != e.uav_id ||
            c.time != e.t)
            ++violations;
    }
    if (ledger_idx != rec.confirmations.size()) ++violations;
    return violations;
}

}  // namespace mdms
