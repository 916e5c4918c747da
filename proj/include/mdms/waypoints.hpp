#pragma once

#include "mdms/processes.hpp"
#include "mdms/region.hpp"
#include "mdms/rng.hpp"
#include "mdms/vec2.hpp"

namespace mdms {

/// Reflects an out-of-region candidate across each violated boundary
/// (x' = -x below 0, x' = 2L - x above L, and likewise in y), then clamps
/// for pathological step lengths. Identity for points already inside.
Vec2 reflect_into_region(Vec2 candidate, const Region& region);

/// Next waypoint from `from` with fixed step length and a direction drawn
/// from the process: candidate = from + step * direction. An out-of-region
/// candidate triggers up to `max_redraws` fresh direction draws; if every
/// attempt lands outside, the last candidate is reflected into the region.
/// The first attempt uses `first_direction` so callers (and tests) can pin
/// it; the overload without it draws all directions from the process.
Vec2 next_waypoint(const Vec2& from, double step, const Vec2& first_direction,
                   const StochasticProcess& process, const Region& region,
                   RngStream& rng, int max_redraws = 32);

Vec2 next_waypoint(const Vec2& from, double step,
                   const StochasticProcess& process, const Region& region,
                   RngStream& rng, int max_redraws = 32);

/// Next waypoint confined to a localization disk: candidates are drawn as
/// in next_waypoint but accepted only inside disk-and-region; after
/// `max_redraws` rejections the last candidate is projected radially onto
/// the disk boundary and clamped into the region. The result is always in
/// the intersection of disk and region (the disk center must lie inside
/// the region).
Vec2 next_waypoint_in_disk(const Vec2& from, double step,
                           const StochasticProcess& process,
                           const Vec2& disk_center, double disk_radius,
                           const Region& region, RngStream& rng,
                           int max_redraws = 32);

/// Radial projection of a candidate onto the disk (identity when already
/// inside), then clamp to the region.
Vec2 constrain_to_disk(const Vec2& candidate, const Vec2& disk_center,
                       double disk_radius, const Region& region);

}  // namespace mdms
