#include "mdms/scenarios.hpp"

#include <stdexcept>

namespace mdms {
namespace {

constexpr Vec2 kStandardPositions[] = {
    {2000.0, 2000.0},   {4000.0, 16000.0}, {10000.0, 10000.0},
    {16000.0, 12000.0}, {18000.0, 2000.0}, {3000.0, 10000.0},
    {5000.0, 4000.0},   {13000.0, 8000.0}, {15000.0, 5000.0},
    {18000.0, 11000.0},
};

std::vector<TargetSpec> standard_layout(TargetKind kind) {
    std::vector<TargetSpec> out;
    out.reserve(std::size(kStandardPositions));
    int id = 0;
    for (const Vec2& p : kStandardPositions) {
        TargetSpec t;
        t.id = id++;
        t.kind = kind;
        t.position = p;
        out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<TargetSpec> standard_fixed_targets() {
    return standard_layout(TargetKind::Fixed);
}

std::vector<TargetSpec> standard_popup_targets(double interval) {
    if (!(interval > 0.0))
        throw std::domain_error("scenario: pop-up interval must be positive");
    auto out = standard_layout(TargetKind::PopUp);
    for (auto& t : out) t.appear_time = interval * static_cast<double>(t.id + 1);
    return out;
}

std::vector<TargetSpec> standard_dynamic_targets(double speed, double lo,
                                                 double hi) {
    if (!(speed > 0.0))
        throw std::domain_error("scenario: walk speed must be positive");
    if (!(lo < hi))
        throw std::domain_error("scenario: multiplier range must be nonempty");
    auto out = standard_layout(TargetKind::Dynamic);
    for (auto& t : out) {
        t.speed = speed;
        t.range_lo = lo;
        t.range_hi = hi;
    }
    return out;
}

std::vector<TargetSpec> mark_false(std::vector<TargetSpec> targets,
                                   std::span<const int> false_ids) {
    for (int id : false_ids) {
        if (id < 0 || id >= static_cast<int>(targets.size()))
            throw std::out_of_range("scenario: false-target id out of range");
        TargetSpec& t = targets[static_cast<std::size_t>(id)];
        t.kind = TargetKind::False;
        t.appear_time = 0.0;
        t.speed = 0.0;
        t.range_lo = 0.0;
        t.range_hi = 0.0;
    }
    return targets;
}

}  // namespace mdms
