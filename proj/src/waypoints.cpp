#include "mdms/waypoints.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdms {

Vec2 reflect_into_region(Vec2 c, const Region& region) {
    if (c.x < 0.0) c.x = -c.x;
    if (c.x > region.length) c.x = 2.0 * region.length - c.x;
    if (c.y < 0.0) c.y = -c.y;
    if (c.y > region.width) c.y = 2.0 * region.width - c.y;
    return region.clamp(c);
}

Vec2 next_waypoint(const Vec2& from, double step, const Vec2& first_direction,
                   const StochasticProcess& process, const Region& region,
                   RngStream& rng, int max_redraws) {
    if (!(step > 0.0)) throw std::domain_error("next_waypoint: step must be > 0");
    Vec2 candidate = from + first_direction * step;
    for (int i = 0; i < max_redraws; ++i) {
        if (region.contains(candidate)) return candidate;
        candidate = from + sample_direction(rng, process) * step;
    }
    if (region.contains(candidate)) return candidate;
    return reflect_into_region(candidate, region);
}

Vec2 next_waypoint(const Vec2& from, double step,
                   const StochasticProcess& process, const Region& region,
                   RngStream& rng, int max_redraws) {
    return next_waypoint(from, step, sample_direction(rng, process), process,
                         region, rng, max_redraws);
}

Vec2 constrain_to_disk(const Vec2& candidate, const Vec2& disk_center,
                       double disk_radius, const Region& region) {
    if (!(disk_radius > 0.0))
        throw std::domain_error("constrain_to_disk: radius must be > 0");
    Vec2 result = candidate;
    const Vec2 offset = candidate - disk_center;
    const double dist = offset.norm();
    if (dist > disk_radius) {
        result = (dist == 0.0) ? disk_center
                               : disk_center + offset * (disk_radius / dist);
    }
    // Clamping toward the region cannot leave the disk while the center is
    // inside the region (projection onto a box is non-expansive).
    return region.clamp(result);
}

Vec2 next_waypoint_in_disk(const Vec2& from, double step,
                           const StochasticProcess& process,
                           const Vec2& disk_center, double disk_radius,
                           const Region& region, RngStream& rng,
                           int max_redraws) {
    if (!(step > 0.0))
        throw std::domain_error("next_waypoint_in_disk: step must be > 0");
    Vec2 candidate{};
    for (int i = 0; i <= max_redraws; ++i) {
        candidate = from + sample_direction(rng, process) * step;
        if (region.contains(candidate) &&
            distance_sq(candidate, disk_center) <= disk_radius * disk_radius)
            return candidate;
    }
    return constrain_to_disk(candidate, disk_center, disk_radius, region);
}

}  // namespace mdms
