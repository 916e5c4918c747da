#pragma once

#include "mdms/vec2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdms {

/// Rectangular search region [0, length] x [0, width], origin at a corner.
struct Region {
    double length = 20000.0;  // extent along x, meters
    double width = 20000.0;   // extent along y, meters

    void validate() const {
        if (!(length > 0.0) || !(width > 0.0))
            throw std::domain_error("region dimensions must be positive");
    }

    bool contains(const Vec2& p) const {
        return p.x >= 0.0 && p.x <= length && p.y >= 0.0 && p.y <= width;
    }

    Vec2 clamp(const Vec2& p) const {
        return {std::clamp(p.x, 0.0, length), std::clamp(p.y, 0.0, width)};
    }

    double area() const { return length * width; }
    double diagonal() const { return std::hypot(length, width); }
};

}  // namespace mdms
