#include "mdms/world.hpp"

#include "mdms/processes.hpp"

#include <stdexcept>

namespace mdms {

World::World(Region region, std::vector<TargetSpec> targets,
             DynamicDrawMode draw_mode)
    : region_(region), specs_(std::move(targets)), draw_mode_(draw_mode) {
    region_.validate();
    targets_.reserve(specs_.size());
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        const TargetSpec& s = specs_[i];
        if (s.id != static_cast<int>(i))
            throw std::invalid_argument("target ids must be 0..n-1 in order");
        if (s.kind == TargetKind::Dynamic && !(s.range_lo <= s.range_hi))
            throw std::invalid_argument("dynamic target range_lo must be <= range_hi");
        if (s.appear_time < 0.0)
            throw std::invalid_argument("target appear_time must be >= 0");
        targets_.push_back(Target{region_.clamp(s.position), false});
        if (s.kind != TargetKind::False) ++real_count_;
    }
}

void World::check_id(int target_id) const {
    if (target_id < 0 || target_id >= target_count())
        throw std::out_of_range("unknown target id");
}

bool World::is_active(int target_id, double t) const {
    check_id(target_id);
    const Target& tgt = targets_[target_id];
    return !tgt.confirmed && t >= specs_[target_id].appear_time;
}

std::vector<int> World::active_ids(double t) const {
    std::vector<int> out;
    out.reserve(targets_.size());
    for (int i = 0; i < target_count(); ++i)
        if (is_active(i, t)) out.push_back(i);
    return out;
}

void World::step_dynamic(RngStream& rng, double kappa_s) {
    if (!(kappa_s > 0.0))
        throw std::domain_error("step_dynamic: kappa_s must be > 0");
    for (int i = 0; i < target_count(); ++i) {
        const TargetSpec& s = specs_[i];
        if (s.kind != TargetKind::Dynamic) continue;
        double rx, ry;
        if (s.range_lo == s.range_hi) {
            rx = ry = s.range_lo;
        } else if (draw_mode_ == DynamicDrawMode::PerAxis) {
            rx = sample_uniform(rng, s.range_lo, s.range_hi);
            ry = sample_uniform(rng, s.range_lo, s.range_hi);
        } else {
            rx = ry = sample_uniform(rng, s.range_lo, s.range_hi);
        }
        Target& tgt = targets_[i];
        tgt.position.x += rx * s.speed * kappa_s;
        tgt.position.y += ry * s.speed * kappa_s;
        tgt.position = region_.clamp(tgt.position);
    }
}

bool World::try_confirm(int target_id, int uav_id, double t) {
    check_id(target_id);
    const TargetSpec& s = specs_[target_id];
    Target& tgt = targets_[target_id];
    if (s.kind == TargetKind::False) return false;
    if (tgt.confirmed) return false;
    if (t < s.appear_time) return false;
    if (t < last_confirm_time_)
        throw std::logic_error("confirmation times must be non-decreasing");
    tgt.confirmed = true;
    ledger_.push_back(ConfirmationRecord{target_id, uav_id, t});
    last_confirm_time_ = t;
    return true;
}

const Vec2& World::target_position(int target_id) const {
    check_id(target_id);
    return targets_[target_id].position;
}

TargetKind World::target_kind(int target_id) const {
    check_id(target_id);
    return specs_[target_id].kind;
}

bool World::is_confirmed(int target_id) const {
    check_id(target_id);
    return targets_[target_id].confirmed;
}

}  // namespace mdms
