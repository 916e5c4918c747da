#pragma once

#include "mdms/region.hpp"
#include "mdms/rng.hpp"
#include "mdms/vec2.hpp"

#include <cstdint>
#include <vector>

namespace mdms {

enum class TargetKind { Fixed, PopUp, Dynamic, False };

/// Whether a dynamic target's random-walk multiplier is drawn once per
/// step (shared by both axes) or independently per axis.
enum class DynamicDrawMode { PerAxis, Shared };

struct TargetSpec {
    int id = 0;
    TargetKind kind = TargetKind::Fixed;
    Vec2 position{};           // initial position, meters
    double appear_time = 0.0;  // pop-up activation time, 0 for other kinds
    double speed = 0.0;        // dynamic walk speed, m/s
    double range_lo = 0.0;     // dynamic multiplier lower bound
    double range_hi = 0.0;     // dynamic multiplier upper bound
};

struct ConfirmationRecord {
    int target_id = -1;
    int uav_id = -1;
    double time = 0.0;
};

/// Ground truth for one mission: targets of all kinds plus the
/// confirmation ledger. Confirmed targets emit no further signal, so
/// each target is counted exactly once; the ledger is append-only and
/// monotone in time.
class World {
public:
    World(Region region, std::vector<TargetSpec> targets,
          DynamicDrawMode draw_mode = DynamicDrawMode::PerAxis);

    const Region& region() const { return region_; }

    /// A target is active when it has appeared (t >= appear_time) and has
    /// not been confirmed. False targets are active indefinitely: they are
    /// detectable but never confirmable.
    bool is_active(int target_id, double t) const;

    /// Ids of all active targets at time t, ascending.
    std::vector<int> active_ids(double t) const;

    /// Random-walk update for every dynamic target, one sampling interval
    /// kappa_s. Positions are clamped to the region.
    void step_dynamic(RngStream& rng, double kappa_s);

    /// Records a confirmation for a real, active, unconfirmed target.
    /// Returns false (ledger untouched) for False targets, not-yet-appeared
    /// targets and already-confirmed targets. First confirmer wins.
    bool try_confirm(int target_id, int uav_id, double t);

    const Vec2& target_position(int target_id) const;
    TargetKind target_kind(int target_id) const;
    bool is_confirmed(int target_id) const;

    int target_count() const { return static_cast<int>(targets_.size()); }
    /// Number of targets that can ever be confirmed (non-False kinds).
    int real_target_count() const { return real_count_; }
    int confirmed_count() const { return static_cast<int>(ledger_.size()); }
    bool all_real_confirmed() const { return confirmed_count() == real_count_; }

    const std::vector<ConfirmationRecord>& ledger() const { return ledger_; }
    const std::vector<TargetSpec>& specs() const { return specs_; }

private:
    struct Target {
        Vec2 position{};
        bool confirmed = false;
    };

    void check_id(int target_id) const;

    Region region_;
    std::vector<TargetSpec> specs_;
    std::vector<Target> targets_;
    std::vector<ConfirmationRecord> ledger_;
    DynamicDrawMode draw_mode_;
    int real_count_ = 0;
    double last_confirm_time_ = 0.0;
};

}  // namespace mdms
