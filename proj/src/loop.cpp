#include "acphase/loop.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "acphase/errors.hpp"

namespace acphase::loops {

namespace {

constexpr double kOnCurveTol = 1e-12;

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm_sq();
    if (len2 == 0.0) return (p - a).norm();
    double t = (p - a).dot(ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

}  // namespace

Loop::Loop(Circle c) : shape_(c) {
    if (!(c.radius > 0.0)) throw ConfigError("circle radius must be positive");
}

Loop::Loop(Polygon p) : shape_(std::move(p)) {
    const auto& v = std::get<Polygon>(shape_).vertices;
    if (v.size() < 3) throw ConfigError("polygon needs at least 3 vertices");
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == v[(i + 1) % v.size()])
            throw ConfigError("polygon has repeated consecutive vertices");
    }
}

int Loop::orientation() const {
    if (is_circle()) return circle().winding >= 0 ? +1 : -1;
    return signed_double_area_integral() <= 0.0 ? +1 : -1;
}

int Loop::winding_number(Vec2 point) const {
    if (min_distance(point) < kOnCurveTol)
        throw PointOnLoop("query point lies on the loop");
    if (is_circle()) {
        const auto& c = circle();
        return (point - c.center).norm() < c.radius ? c.winding : 0;
    }
    const auto& v = polygon().vertices;
    double angle = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i] - point;
        const Vec2 b = v[(i + 1) % v.size()] - point;
        angle += std::atan2(a.cross(b), a.dot(b));
    }
    return static_cast<int>(std::lround(angle / (2.0 * std::numbers::pi)));
}

double Loop::signed_double_area_integral() const {
    if (is_circle()) {
        const auto& c = circle();
        return -2.0 * std::numbers::pi * c.radius * c.radius * c.winding;
    }
    const auto& v = polygon().vertices;
    double sum = 0.0;
    for (size_t i = 0; i < v.size(); ++i) sum -= v[i].cross(v[(i + 1) % v.size()]);
    return sum;
}

double Loop::min_distance(Vec2 point) const {
    if (is_circle()) {
        const auto& c = circle();
        return std::abs((point - c.center).norm() - c.radius);
    }
    const auto& v = polygon().vertices;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < v.size(); ++i)
        best = std::min(best, segment_distance(point, v[i], v[(i + 1) % v.size()]));
    return best;
}

quadrature::Result Loop::integrate(
    const std::function<double(Vec2, Vec2)>& g,
    const quadrature::Options& opts) const {
    quadrature::Result total;
    if (is_circle()) {
        const auto& c = circle();
        if (c.winding == 0) return total;
        const double omega = 2.0 * std::numbers::pi * c.winding;
        auto f = [&](double t) {
            const double phi = omega * t;
            const Vec2 x = c.center + Vec2{c.radius * std::cos(phi), c.radius * std::sin(phi)};
            const Vec2 tangent{-c.radius * omega * std::sin(phi), c.radius * omega * std::cos(phi)};
            return g(x, tangent);
        };
        return quadrature::integrate(f, 0.0, 1.0, opts);
    }
    const auto& v = polygon().vertices;
    quadrature::Options edge_opts = opts;
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i];
        const Vec2 ab = v[(i + 1) % v.size()] - a;
        auto f = [&](double t) { return g(a + t * ab, ab); };
        edge_opts.max_panels = opts.max_panels - total.panels;
        auto r = quadrature::integrate(f, 0.0, 1.0, edge_opts);
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.panels += r.panels;
    }
    return total;
}

}  // namespace acphase::loops
