#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "acphase/fields.hpp"
#include "acphase/geometry.hpp"

namespace acphase::moyal {

/// Non-commutativity parameters. theta_bar is always derived from (theta,
/// alpha) through theta * theta_bar = 4 alpha^2 (1 - alpha^2), so the scalar
/// consistency constraint holds by construction.
struct NCParams {
    double theta{0.0};
    double alpha{1.0};
    double theta_bar{0.0};

    /// Throws ConfigError unless 0 < alpha <= 1, and unless alpha = 1 whenever
    /// theta = 0 (theta_bar would be undefined otherwise).
    static NCParams make(double theta, double alpha);

    bool commutative() const { return theta == 0.0 && alpha == 1.0; }
};

/// Scalar function on the plane with first and second partials. Partials are
/// analytic when supplied, otherwise a central finite-difference fallback with
/// step 1e-6 is used (flagged by analytic = false).
struct PlaneFunction {
    std::function<std::complex<double>(Vec2)> value;
    std::function<std::complex<double>(Vec2, int)> d1;       // d_i, i in {0,1}
    std::function<std::complex<double>(Vec2, int, int)> d2;  // d_i d_j
    bool analytic{true};

    static PlaneFunction from_value(std::function<std::complex<double>(Vec2)> f,
                                    double fd_step = 1e-6);
};

/// First-order Moyal product: (f*g)(x) = f g + (i/2) theta eps^{ij} d_i f d_j g.
/// The result carries finite-difference partials.
PlaneFunction star_first_order(const PlaneFunction& f, const PlaneFunction& g,
                               double theta);

/// x_i -> x_i - (theta/2) eps_{ij} p_j, with eps_{12} = +1.
Vec2 bopp_shift(Vec2 x, Vec2 p, double theta);

/// Phase-space generalization with scaling alpha:
///   x_i -> alpha x_i - (theta/2 alpha) eps_{ij} p_j
///   p_i -> alpha p_i + (theta_bar/2 alpha) eps_{ij} x_j
std::pair<Vec2, Vec2> generalized_bopp_shift(Vec2 x, Vec2 p, const NCParams& nc);

/// Field-strength shift F^{0l} -> alpha F^{0l} + (theta/2 alpha) eps^{ij} p_i d_j F^{0l},
/// evaluated at a point. alpha = 1 gives the plain NC-space shift.
std::pair<double, double> field_shift(const fields::LineChargeField& field, Vec2 point,
                                      Vec2 p, const NCParams& nc);

struct ConvergenceReport {
    std::vector<double> thetas;
    std::vector<double> deltas;     // max-norm discrepancy per theta
    double fitted_slope{0.0};
    bool exact_agreement{false};    // all deltas below the noise floor
};

/// Certifies that the first-order field shift agrees with the exact coordinate
/// (Bopp) shift of the field to O(theta^2): Delta(theta) is the max-norm over a
/// 20x20 grid on [-2,2]^2 (excluding singular disks) of the difference between
/// F evaluated at the Bopp-shifted point and the first-order shifted F; the
/// slope of log Delta vs log theta is fitted by least squares.
/// Throws InsufficientGrid for fewer than 2 theta values.
ConvergenceReport star_shift_equivalence(const fields::LineChargeField& field, Vec2 p,
                                         const std::vector<double>& theta_grid);

}  // namespace acphase::moyal
