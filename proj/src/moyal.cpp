#include "acphase/moyal.hpp"

#include <cmath>

#include "acphase/errors.hpp"

namespace acphase::moyal {

NCParams NCParams::make(double theta, double alpha) {
    if (!std::isfinite(theta)) throw ConfigError("nc.theta must be finite");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("nc.alpha must lie in (0, 1]");
    NCParams nc;
    nc.theta = theta;
    nc.alpha = alpha;
    if (alpha == 1.0) {
        nc.theta_bar = 0.0;
    } else {
        if (theta == 0.0)
            throw ConfigError("nc.theta = 0 requires nc.alpha = 1 (theta_bar undefined)");
        nc.theta_bar = 4.0 * alpha * alpha * (1.0 - alpha * alpha) / theta;
    }
    return nc;
}

PlaneFunction PlaneFunction::from_value(std::function<std::complex<double>(Vec2)> f,
                                        double fd_step) {
    PlaneFunction pf;
    pf.value = f;
    pf.analytic = false;
    const double h = fd_step;
    pf.d1 = [f, h](Vec2 x, int i) {
        const Vec2 e = (i == 0) ? Vec2{h, 0.0} : Vec2{0.0, h};
        return (f(x + e) - f(x - e)) / (2.0 * h);
    };
    pf.d2 = [f, h](Vec2 x, int i, int j) {
        const Vec2 ei = (i == 0) ? Vec2{h, 0.0} : Vec2{0.0, h};
        const Vec2 ej = (j == 0) ? Vec2{h, 0.0} : Vec2{0.0, h};
        if (i == j) return (f(x + ei) - 2.0 * f(x) + f(x - ei)) / (h * h);
        return (f(x + ei + ej) - f(x + ei - ej) - f(x - ei + ej) + f(x - ei - ej)) /
               (4.0 * h * h);
    };
    return pf;
}

PlaneFunction star_first_order(const PlaneFunction& f, const PlaneFunction& g,
                               double theta) {
    auto fv = f.value;
    auto fd = f.d1;
    auto gv = g.value;
    auto gd = g.d1;
    const std::complex<double> ihalf{0.0, 0.5 * theta};
    return PlaneFunction::from_value([=](Vec2 x) {
        // eps^{ij} d_i f d_j g = d_1 f d_2 g - d_2 f d_1 g
        const auto bracket = fd(x, 0) * gd(x, 1) - fd(x, 1) * gd(x, 0);
        return fv(x) * gv(x) + ihalf * bracket;
    });
}

Vec2 bopp_shift(Vec2 x, Vec2 p, double theta) {
    // eps_{12} = +1: x_1 -> x_1 - (theta/2) p_2, x_2 -> x_2 + (theta/2) p_1
    return {x.x - 0.5 * theta * p.y, x.y + 0.5 * theta * p.x};
}

std::pair<Vec2, Vec2> generalized_bopp_shift(Vec2 x, Vec2 p, const NCParams& nc) {
    const double a = nc.alpha;
    const Vec2 xs{a * x.x - nc.theta / (2.0 * a) * p.y,
                  a * x.y + nc.theta / (2.0 * a) * p.x};
    const Vec2 ps{a * p.x + nc.theta_bar / (2.0 * a) * x.y,
                  a * p.y - nc.theta_bar / (2.0 * a) * x.x};
    return {xs, ps};
}

std::pair<double, double> field_shift(const fields::LineChargeField& field, Vec2 point,
                                      Vec2 p, const NCParams& nc) {
    const auto [f01, f02] = field.f_tensor_0l(point);
    const Mat2 g = field.grad_E(point);
    const double c = nc.theta / (2.0 * nc.alpha);
    // eps^{ij} p_i d_j F = p_1 d_2 F - p_2 d_1 F, with d_j F^{0l} = g[j][l]
    const double s1 = p.x * g.m[1][0] - p.y * g.m[0][0];
    const double s2 = p.x * g.m[1][1] - p.y * g.m[0][1];
    return {nc.alpha * f01 + c * s1, nc.alpha * f02 + c * s2};
}

ConvergenceReport star_shift_equivalence(const fields::LineChargeField& field, Vec2 p,
                                         const std::vector<double>& theta_grid) {
    if (theta_grid.size() < 2)
        throw InsufficientGrid("need at least 2 theta values to fit a convergence order");

    // Fixed 20x20 sample grid on [-2,2]^2, excluding disks around filaments.
    constexpr int kN = 20;
    constexpr double kExclusionRadius = 0.3;
    std::vector<Vec2> samples;
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) {
            const Vec2 x{-2.0 + 4.0 * i / (kN - 1), -2.0 + 4.0 * j / (kN - 1)};
            if (field.clearance(x) > kExclusionRadius) samples.push_back(x);
        }

    ConvergenceReport report;
    report.thetas = theta_grid;
    for (double theta : theta_grid) {
        const NCParams nc = (theta == 0.0) ? NCParams{} : NCParams::make(theta, 1.0);
        double delta = 0.0;
        for (const Vec2 x : samples) {
            const Vec2 xs = bopp_shift(x, p, theta);
            if (field.clearance(xs) <= fields::kSingularClearance) continue;
            const auto [e1, e2] = field.f_tensor_0l(xs);
            const auto [s1, s2] = field_shift(field, x, p, nc);
            delta = std::max({delta, std::abs(e1 - s1), std::abs(e2 - s2)});
        }
        report.deltas.push_back(delta);
    }

    // Least-squares slope of log Delta vs log theta over usable points.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < report.thetas.size(); ++i) {
        if (report.thetas[i] <= 0.0 || report.deltas[i] < 1e-15) continue;
        const double lx = std::log(report.thetas[i]);
        const double ly = std::log(report.deltas[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) {
        report.exact_agreement = true;
        return report;
    }
    report.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return report;
}

}  // namespace acphase::moyal
