#include "mdms/sensing.hpp"

#include <cmath>
#include <limits>

namespace mdms {

void SensorSuite::validate() const {
    if (sensors.empty())
        throw std::invalid_argument("sensor suite must not be empty");
    for (int i = 0; i < levels(); ++i) {
        const SensorSpec& s = sensors[i];
        if (s.level != i + 1)
            throw std::invalid_argument("sensor levels must be 1..n in order");
        if (!(s.radius > 0.0))
            throw std::invalid_argument("sensor radius must be > 0");
        if (i + 1 < levels() && !(sensors[i + 1].radius < s.radius))
            throw std::invalid_argument("sensor radii must strictly decrease with level");
        const SensorRole expected =
            (i + 1 == levels()) ? SensorRole::Confirmation : SensorRole::Detection;
        if (s.role != expected)
            throw std::invalid_argument(
                "levels 1..n-1 must be detection sensors, level n confirmation");
    }
}

const SensorSpec& SensorSuite::at_level(int level) const {
    if (level < 1 || level > levels())
        throw std::out_of_range("sensor level out of range");
    return sensors[level - 1];
}

bool detect_any(const World& world, double t, const Vec2& pos, double radius) {
    const double r_sq = radius * radius;
    for (int i = 0; i < world.target_count(); ++i) {
        if (!world.is_active(i, t)) continue;
        if (distance_sq(pos, world.target_position(i)) < r_sq) return true;
    }
    return false;
}

std::optional<int> nearest_confirmable(const World& world, double t,
                                       const Vec2& pos, double radius) {
    const double r_sq = radius * radius;
    double best_sq = std::numeric_limits<double>::infinity();
    int best_id = -1;
    for (int i = 0; i < world.target_count(); ++i) {
        if (world.target_kind(i) == TargetKind::False) continue;
        if (!world.is_active(i, t)) continue;
        const double d_sq = distance_sq(pos, world.target_position(i));
        // Ties at identical distance break to the lowest id (scan order).
        if (d_sq < r_sq && d_sq < best_sq) {
            best_sq = d_sq;
            best_id = i;
        }
    }
    if (best_id < 0) return std::nullopt;
    return best_id;
}

double signal_strength(const World& world, double t, const Vec2& pos) {
    double best = 0.0;
    for (int i = 0; i < world.target_count(); ++i) {
        if (!world.is_active(i, t)) continue;
        const double d = distance(pos, world.target_position(i));
        best = std::max(best, 1.0 / (1.0 + d));
    }
    return best;
}

}  // namespace mdms
