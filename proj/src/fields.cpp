#include "acphase/fields.hpp"

#include <limits>
#include <numbers>
#include <sstream>

#include "acphase/errors.hpp"

namespace acphase::fields {

namespace {

void check_clearance(const LineChargeField& field, Vec2 point) {
    if (field.clearance(point) < kSingularClearance) {
        std::ostringstream os;
        os << "field evaluation at (" << point.x << ", " << point.y
           << ") is within " << kSingularClearance << " of a filament";
        throw SingularPoint(os.str());
    }
}

}  // namespace

Vec2 LineChargeField::eval_E(Vec2 point) const {
    check_clearance(*this, point);
    Vec2 e;
    for (const auto& f : filaments_) {
        const Vec2 d = point - f.position;
        const double c = f.lambda_e / (2.0 * std::numbers::pi * d.norm_sq());
        e = e + c * d;
    }
    return e;
}

Mat2 LineChargeField::grad_E(Vec2 point) const {
    check_clearance(*this, point);
    Mat2 g;
    for (const auto& f : filaments_) {
        const Vec2 d = point - f.position;
        const double r2 = d.norm_sq();
        const double c = f.lambda_e / (2.0 * std::numbers::pi);
        const double dd[2] = {d.x, d.y};
        // d_j (d_l / r^2) = delta_jl / r^2 - 2 d_j d_l / r^4
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
                const double kron = (j == l) ? 1.0 : 0.0;
                g.m[j][l] += c * (kron / r2 - 2.0 * dd[j] * dd[l] / (r2 * r2));
            }
    }
    return g;
}

std::pair<double, double> LineChargeField::f_tensor_0l(Vec2 point) const {
    const Vec2 e = eval_E(point);
    return {e.x, e.y};
}

double LineChargeField::clearance(Vec2 point) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : filaments_) best = std::min(best, (point - f.position).norm());
    return best;
}

}  // namespace acphase::fields
