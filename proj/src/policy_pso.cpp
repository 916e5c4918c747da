#include "mdms/policy_pso.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mdms {

void PsoConfig::validate() const {
    if (!(inertia > 0.0) || !(inertia < 1.0))
        throw std::domain_error("pso: inertia must lie in (0, 1)");
    if (!(cognitive > 0.0) || !(social > 0.0))
        throw std::domain_error("pso: acceleration coefficients must be positive");
    if (!(speed_cap > 0.0))
        throw std::domain_error("pso: speed cap must be positive");
    if (confirmation_radius < 0.0)
        throw std::domain_error("pso: confirmation radius must be non-negative");
    if (diversity_low < 0.0)
        throw std::domain_error("pso: diversity_low must be non-negative");
    if (!(diversity_high_frac > 0.0) || diversity_high_frac > 1.0)
        throw std::domain_error("pso: diversity_high_frac must lie in (0, 1]");
}

PsoPolicy::PsoPolicy(PsoConfig config, Region region)
    : config_(config), region_(region) {
    config_.validate();
    region_.validate();
    if (config_.variant == PsoVariant::Arpso &&
        config_.diversity_low >= config_.diversity_high_frac * region_.diagonal())
        throw std::domain_error("pso: diversity_low must be below the high threshold");
}

void PsoPolicy::reset(std::span<const Vec2> start_positions) {
    agents_.assign(start_positions.size(), AgentState{});
    for (std::size_t i = 0; i < start_positions.size(); ++i)
        agents_[i].position = start_positions[i];
    gbest_position_ = Vec2{};
    gbest_fitness_ = -1.0;
    repulsion_ = false;
}

double PsoPolicy::swarm_diversity() const {
    if (agents_.empty()) return 0.0;
    Vec2 centroid{};
    for (const auto& a : agents_) centroid += a.position;
    centroid = centroid * (1.0 / static_cast<double>(agents_.size()));
    double sum = 0.0;
    for (const auto& a : agents_) sum += distance(a.position, centroid);
    return sum / static_cast<double>(agents_.size());
}

void PsoPolicy::invalidate_bests() {
    for (auto& a : agents_) a.best_fitness = -1.0;
    gbest_fitness_ = -1.0;
}

Vec2 PsoPolicy::velocity_update(AgentState& st, const AgentObs& obs,
                                double fitness, RngStream& rng) {
    // Personal and shared bests first, so both are valid below even right
    // after an invalidation.
    if (fitness > st.best_fitness) {
        st.best_fitness = fitness;
        st.best_position = obs.position;
    }
    if (st.best_fitness > gbest_fitness_) {
        gbest_fitness_ = st.best_fitness;
        gbest_position_ = st.best_position;
    }

    const Vec2 to_pbest = st.best_position - obs.position;
    const Vec2 to_gbest = gbest_position_ - obs.position;

    Vec2 v = st.velocity * config_.inertia;
    if (config_.variant == PsoVariant::Spso) {
        // Rotation-invariant update: aim at a uniform random point of the
        // disk spanned by the weighted center of x, pbest and gbest. When
        // this agent holds the shared best the two attractors coincide and
        // the center degenerates to the two-point average.
        Vec2 center;
        if (st.best_position == gbest_position_) {
            center = obs.position + to_pbest * (config_.cognitive / 2.0);
        } else {
            center = obs.position +
                     (to_pbest * config_.cognitive + to_gbest * config_.social) *
                         (1.0 / 3.0);
        }
        const double radius = distance(center, obs.position);
        const double theta = 2.0 * std::numbers::pi * rng.next_double();
        const double rho = radius * std::sqrt(rng.next_double());
        const Vec2 sample = center + Vec2{rho * std::cos(theta), rho * std::sin(theta)};
        v += sample - obs.position;
    } else {
        const double sign =
            (config_.variant == PsoVariant::Arpso && repulsion_) ? -1.0 : 1.0;
        const Vec2 cog{config_.cognitive * rng.next_double() * to_pbest.x,
                       config_.cognitive * rng.next_double() * to_pbest.y};
        const Vec2 soc{config_.social * rng.next_double() * to_gbest.x,
                       config_.social * rng.next_double() * to_gbest.y};
        v += (cog + soc) * sign;
    }

    const double speed = v.norm();
    if (speed > config_.speed_cap) v = v * (config_.speed_cap / speed);
    return v;
}

PolicyAction PsoPolicy::step(const AgentObs& obs, SensorView& view,
                             EventSink& events, RngStream& rng) {
    auto& st = agents_.at(static_cast<std::size_t>(obs.agent_id));
    st.position = obs.position;

    if (config_.variant == PsoVariant::Arpso && obs.agent_id == 0) {
        // Diversity is evaluated once per simulation step, when the first
        // agent comes up; the phase then holds for the whole sweep.
        const double div = swarm_diversity();
        if (!repulsion_ && div < config_.diversity_low) repulsion_ = true;
        if (repulsion_ && div > config_.diversity_high_frac * region_.diagonal())
            repulsion_ = false;
    }

    if (!st.initialized) {
        const double theta = 2.0 * std::numbers::pi * rng.next_double();
        st.velocity = Vec2{std::cos(theta), std::sin(theta)} * config_.speed_cap;
        st.initialized = true;
    }

    if (auto confirmed = view.try_confirm(config_.confirmation_radius)) {
        Event e;
        e.t = obs.t;
        e.uav_id = obs.agent_id;
        e.kind = EventKind::Confirmation;
        e.position = obs.position;
        e.sensor_radius = config_.confirmation_radius;
        e.target_id = confirmed->target_id;
        e.target_pos = confirmed->target_position;
        events.push(e);
        // The fitness field just lost a peak; every best may reference it,
        // so all of them are dropped and rebuilt from fresh reads.
        invalidate_bests();
    }

    st.velocity = velocity_update(st, obs, view.signal(), rng);

    double speed = st.velocity.norm();
    if (speed < 1e-3) {
        // Both attractors can sit on the agent itself (fresh bests after a
        // confirmation), leaving only the inertia term, which decays to
        // nothing. A parked agent re-enters cruise on a random heading.
        const double theta = 2.0 * std::numbers::pi * rng.next_double();
        st.velocity = Vec2{std::cos(theta), std::sin(theta)} * config_.speed_cap;
        speed = config_.speed_cap;
    }
    return PolicyAction::set_velocity(st.velocity * (config_.speed_cap / speed));
}

std::string PsoPolicy::name() const {
    switch (config_.variant) {
        case PsoVariant::Pso: return "pso";
        case PsoVariant::Spso: return "spso";
        case PsoVariant::Arpso: return "arpso";
    }
    return "pso";
}

}  // namespace mdms
