#pragma once

#include <cmath>

namespace acphase {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    /// z-component of the cross product (this x o).
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
    constexpr double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm_sq()); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

/// 2x2 real matrix, indexed m[row][col].
struct Mat2 {
    double m[2][2]{{0.0, 0.0}, {0.0, 0.0}};

    double trace() const { return m[0][0] + m[1][1]; }
};

}  // namespace acphase
