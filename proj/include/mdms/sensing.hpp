#pragma once

#include "mdms/vec2.hpp"
#include "mdms/world.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace mdms {

enum class SensorRole { Detection, Confirmation };

/// One onboard sensor. Levels 1..n-1 are detection sensors (wide range,
/// anonymous reports, false positives possible); level n is the
/// confirmation sensor (short range, exact identity, no false positives).
/// Thresholds on signal strength are equivalent to a strict radius test,
/// which is what the simulator evaluates.
struct SensorSpec {
    int level = 1;
    SensorRole role = SensorRole::Detection;
    double radius = 0.0;  // meters
};

/// Ordered sensor repository for one UAV: decreasing radius with level,
/// last entry is the confirmation sensor.
struct SensorSuite {
    std::vector<SensorSpec> sensors;

    void validate() const;
    int levels() const { return static_cast<int>(sensors.size()); }
    const SensorSpec& at_level(int level) const;
    double confirmation_radius() const { return sensors.back().radius; }
};

/// Detection predicate: true iff any active target (false targets
/// included) lies strictly within `radius` of `pos`. The report is
/// anonymous: no identity, no bearing.
bool detect_any(const World& world, double t, const Vec2& pos, double radius);

/// Confirmation predicate: id of the nearest active real target strictly
/// within `radius`, ties broken by lowest id. False targets never
/// qualify.
std::optional<int> nearest_confirmable(const World& world, double t,
                                       const Vec2& pos, double radius);

/// Scalar signal strength 1/(1 + d) to the nearest active target (false
/// targets emit the same signature). Zero when nothing is active.
double signal_strength(const World& world, double t, const Vec2& pos);

struct ConfirmOutcome {
    int target_id = -1;
    Vec2 target_position{};
};

/**
 * SensorView — the only window a search policy gets onto the world.
 *
 * Constructed by the engine per agent per step, bound to that agent's
 * position. It answers radius predicates and scalar signal reads only;
 * target lists, other agents' states and world internals are not
 * reachable through it, which is what enforces the no-inter-agent
 * information-flow contract for self-cognitive policies.
 *
 * The view also counts its own queries so the engine can assert the
 * one-sensor-at-a-time rule per policy step.
 */
class SensorView {
public:
    SensorView(World& world, double t, int uav_id, const Vec2& uav_pos)
        : world_(world), t_(t), uav_id_(uav_id), pos_(uav_pos) {}

    SensorView(const SensorView&) = delete;
    SensorView& operator=(const SensorView&) = delete;

    /// Detection sensor read at the agent's own position.
    bool detect(double radius) {
        ++detect_queries_;
        return detect_any(world_, t_, pos_, radius);
    }

    /// Confirmation sensor read; on success the confirmation is recorded
    /// in the ground-truth ledger (first confirmer wins) and the exact
    /// target location is returned.
    std::optional<ConfirmOutcome> try_confirm(double radius) {
        ++confirm_queries_;
        const auto id = nearest_confirmable(world_, t_, pos_, radius);
        if (!id) return std::nullopt;
        if (!world_.try_confirm(*id, uav_id_, t_)) return std::nullopt;
        return ConfirmOutcome{*id, world_.target_position(*id)};
    }

    /// Proportional-strength signal read (PSO-family fitness).
    double signal() {
        ++signal_queries_;
        return signal_strength(world_, t_, pos_);
    }

    double time() const { return t_; }
    const Vec2& position() const { return pos_; }
    int uav_id() const { return uav_id_; }

    int detect_queries() const { return detect_queries_; }
    int confirm_queries() const { return confirm_queries_; }
    int signal_queries() const { return signal_queries_; }

private:
    World& world_;
    double t_;
    int uav_id_;
    Vec2 pos_;
    int detect_queries_ = 0;
    int confirm_queries_ = 0;
    int signal_queries_ = 0;
};

}  // namespace mdms
