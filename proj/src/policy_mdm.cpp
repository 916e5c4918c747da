#include "mdms/policy_mdm.hpp"

#include "mdms/waypoints.hpp"

#include <cmath>
#include <stdexcept>

namespace mdms {

void IndexConfig::validate() const {
    if (!(0.0 < gamma && gamma < c_min && c_min < c_max && c_max <= 1.0))
        throw std::invalid_argument(
            "index constants must satisfy 0 < gamma < c_min < c_max <= 1");
    if (!(kappa > 0.0)) throw std::invalid_argument("index kappa must be > 0");
}

double IndexConfig::value_at(double dwell_seconds) const {
    return gamma + (c_max - c_min) * std::exp(-dwell_seconds / kappa);
}

bool IndexConfig::expired_at(double dwell_seconds) const {
    return value_at(dwell_seconds) < c_min;
}

double IndexConfig::expiry_dwell() const {
    return kappa * std::log((c_max - c_min) / (c_min - gamma));
}

void KnowledgeBase::validate() const {
    if (levels.empty()) throw std::invalid_argument("knowledge base is empty");
    SensorSuite suite;
    for (const SearchLevel& lvl : levels) suite.sensors.push_back(lvl.sensor);
    suite.validate();
    for (int k = 0; k < level_count(); ++k) {
        const SearchLevel& lvl = levels[k];
        lvl.process.validate();
        if (!(lvl.step_length > 0.0))
            throw std::invalid_argument("step length must be > 0");
        if (k > 0) {
            // Non-strict ordering: the shortest useful delta1 equals r1,
            // which makes delta1 == delta2 a legal configuration.
            if (lvl.step_length > levels[k - 1].step_length)
                throw std::invalid_argument(
                    "step lengths must be non-increasing with level");
            if (lvl.step_length > levels[k - 1].sensor.radius)
                throw std::invalid_argument(
                    "step length at level k+1 must not exceed sensing radius r_k");
            lvl.index.validate();
        }
    }
}

KnowledgeBase KnowledgeBase::two_level(const Region& region,
                                       const StochasticProcess& level1_process,
                                       const StochasticProcess& level2_process,
                                       double delta1, double delta2, double r1,
                                       double r2, const IndexConfig& index) {
    (void)region;
    KnowledgeBase kb;
    kb.levels.push_back(SearchLevel{
        SensorSpec{1, SensorRole::Detection, r1}, level1_process, delta1, index});
    kb.levels.push_back(SearchLevel{
        SensorSpec{2, SensorRole::Confirmation, r2}, level2_process, delta2, index});
    kb.validate();
    return kb;
}

MdmPolicy::MdmPolicy(KnowledgeBase kb, Region region)
    : kb_(std::move(kb)), region_(region) {
    kb_.validate();
    region_.validate();
}

std::string MdmPolicy::name() const {
    std::string n = "mdm(";
    for (int k = 1; k <= kb_.level_count(); ++k) {
        if (k > 1) n += "+";
        n += kb_.at(k).process.name();
    }
    return n + ")";
}

void MdmPolicy::reset(std::span<const Vec2> start_positions) {
    agents_.assign(start_positions.size(), AgentState{});
}

Vec2 MdmPolicy::draw_waypoint(const AgentState& st, const Vec2& from,
                              RngStream& rng) const {
    const SearchLevel& lvl = kb_.at(st.level);
    if (st.level == 1)
        return next_waypoint(from, lvl.step_length, lvl.process, region_, rng);
    return next_waypoint_in_disk(from, lvl.step_length, lvl.process,
                                 st.disk_center, st.disk_radius, region_, rng,
                                 0);
}

void MdmPolicy::enter_level(AgentState& st, int level, double t) {
    st.level = level;
    st.level_entry_t = t;
    st.waypoint_valid = false;
    st.detect_latched = false;
    if (level == 1) {
        st.disk_center = Vec2{};
        st.disk_radius = 0.0;
    }
}

static const int kLatchMode = 1;  // EXPERIMENT: 0 immediate, 1 fire ctr, 2 arrival ctr

PolicyAction MdmPolicy::step(const AgentObs& obs, SensorView& view,
                             EventSink& events, RngStream& rng) {
    AgentState& st = agents_.at(obs.agent_id);
    const int n = kb_.level_count();

    // Dwell-index check first: a stalled level is abandoned before any
    // further sensing, back to level 1.
    if (st.level >= 2) {
        const SearchLevel& lvl = kb_.at(st.level);
        if (lvl.index.expired_at(obs.t - st.level_entry_t)) {
            events.push(Event{.t = obs.t,
                              .uav_id = obs.agent_id,
                              .kind = EventKind::IndexReset,
                              .level = st.level,
                              .position = obs.position,
                              .disk_center = st.disk_center,
                              .disk_radius = st.disk_radius});
            events.push(Event{.t = obs.t,
                              .uav_id = obs.agent_id,
                              .kind = EventKind::LevelSwitch,
                              .level = st.level,
                              .level_to = 1,
                              .position = obs.position});
            enter_level(st, 1, obs.t);
        }
    }

    // One sensor read per step: the level's own sensor.
    if (st.level < n) {
        const SearchLevel& lvl = kb_.at(st.level);
        const bool fired = view.detect(lvl.sensor.radius);
        if (fired && (kLatchMode == 0 || !st.detect_latched)) {
            events.push(Event{.t = obs.t,
                              .uav_id = obs.agent_id,
                              .kind = EventKind::Detection,
                              .level = st.level,
                              .position = obs.position,
                              .sensor_radius = lvl.sensor.radius});
            st.detect_latched = true;
            st.latch_pos = obs.position;
        }
        const bool do_switch =
            kLatchMode == 0 ? fired : (st.detect_latched && obs.waypoint_reached);
        if (do_switch) {
            // Localize: the next level searches the disk of radius r_k
            // centered where this detection fired.
            const int from = st.level;
            const Vec2 center =
                kLatchMode == 1 ? st.latch_pos : obs.position;
            enter_level(st, from + 1, obs.t);
            st.disk_center = center;
            st.disk_radius = lvl.sensor.radius;
            events.push(Event{.t = obs.t,
                              .uav_id = obs.agent_id,
                              .kind = EventKind::LevelSwitch,
                              .level = from,
                              .level_to = st.level,
                              .position = obs.position,
                              .disk_center = st.disk_center,
                              .disk_radius = st.disk_radius});
        }
    } else {
        const SearchLevel& lvl = kb_.at(n);
        if (const auto confirmed = view.try_confirm(lvl.sensor.radius)) {
            events.push(Event{.t = obs.t,
                              .uav_id = obs.agent_id,
                              .kind = EventKind::Confirmation,
                              .level = n,
                              .position = obs.position,
                              .sensor_radius = lvl.sensor.radius,
                              .disk_center = st.disk_center,
                              .disk_radius = st.disk_radius,
                              .target_id = confirmed->target_id,
                              .target_pos = confirmed->target_position});
            events.push(Event{.t = obs.t,
                              .uav_id = obs.agent_id,
                              .kind = EventKind::LevelSwitch,
                              .level = n,
                              .level_to = 1,
                              .position = obs.position});
            enter_level(st, 1, obs.t);
        }
    }

    if (!st.waypoint_valid || obs.waypoint_reached) {
        st.waypoint = draw_waypoint(st, obs.position, rng);
        st.waypoint_valid = true;
        const SearchLevel& lvl = kb_.at(st.level);
        events.push(Event{.t = obs.t,
                          .uav_id = obs.agent_id,
                          .kind = EventKind::WaypointSet,
                          .level = st.level,
                          .position = obs.position,
                          .waypoint = st.waypoint,
                          .step_length = lvl.step_length,
                          .disk_center = st.disk_center,
                          .disk_radius = st.disk_radius});
        return PolicyAction::set_waypoint(st.waypoint);
    }
    return PolicyAction::hold();
}

}  // namespace mdms
