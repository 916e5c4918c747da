#pragma once

#include <cmath>

namespace mdms {

/// Planar vector in meters (positions) or m/s (velocities). All geometry
/// in the simulator is 2-D; altitude separation is assumed.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }
    constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }

    /// Unit vector in the same direction; undefined for the zero vector.
    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

constexpr double distance_sq(const Vec2& a, const Vec2& b) {
    return (a - b).norm_sq();
}

}  // namespace mdms
