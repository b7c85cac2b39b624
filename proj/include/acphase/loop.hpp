#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "acphase/geometry.hpp"
#include "acphase/quadrature.hpp"

namespace acphase::loops {

struct Circle {
    Vec2 center;
    double radius{1.0};
    int winding{1};  // signed; negative traverses clockwise
};

struct Polygon {
    std::vector<Vec2> vertices;  // implicitly closed, ccw order for +1 orientation
};

/// Closed oriented planar curve. A circle carries an explicit signed winding;
/// a polygon's orientation comes from its vertex order.
class Loop {
public:
    explicit Loop(Circle c);
    explicit Loop(Polygon p);

    bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
    const Circle& circle() const { return std::get<Circle>(shape_); }
    const Polygon& polygon() const { return std::get<Polygon>(shape_); }

    /// +1 if the parametrization runs counterclockwise, -1 otherwise.
    int orientation() const;

    /// Winding number about a point by angle accumulation.
    /// Throws PointOnLoop if the point lies on the curve.
    int winding_number(Vec2 point) const;

    /// closed-integral(x_2 dx_1 - x_1 dx_2) in closed form (= -2 * signed area,
    /// times winding for circles).
    double signed_double_area_integral() const;

    double min_distance(Vec2 point) const;

    /// Line integral of g(x) . dx over the loop. The integrand receives the
    /// current point and the unnormalized tangent; the quadrature variable is
    /// arc parameter per smooth segment.
    quadrature::Result integrate(
        const std::function<double(Vec2 point, Vec2 tangent)>& g,
        const quadrature::Options& opts = {}) const;

private:
    std::variant<Circle, Polygon> shape_;
};

}  // namespace acphase::loops
