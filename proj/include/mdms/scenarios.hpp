#pragma once

#include "mdms/world.hpp"

#include <span>
#include <vector>

namespace mdms {

/// The standard ten-target layout over the 20 km x 20 km region. All
/// scenario presets share these positions; they differ in target kind.
std::vector<TargetSpec> standard_fixed_targets();

/// Same layout, targets appearing one by one: target id i pops up at
/// (i + 1) * interval seconds.
std::vector<TargetSpec> standard_popup_targets(double interval = 200.0);

/// Same layout, targets random-walking with per-step multiplier uniform
/// on [lo, hi] at walk speed `speed`.
std::vector<TargetSpec> standard_dynamic_targets(double speed = 5.0,
                                                 double lo = -0.2,
                                                 double hi = 1.0);

/// Reclassifies the given target ids as false targets: detectable
/// forever, never confirmable, stationary, present from t = 0.
std::vector<TargetSpec> mark_false(std::vector<TargetSpec> targets,
                                   std::span<const int> false_ids);

/// Default ids reclassified by the false-target experiment.
inline constexpr int kDefaultFalseIds[] = {2, 5, 8};

}  // namespace mdms
