#pragma once

#include "acphase/fields.hpp"
#include "acphase/loop.hpp"
#include "acphase/moyal.hpp"

namespace acphase::phase {

/// Neutral spin-1 particle restricted to the plane. The z-spin eigenvalue s3
/// enters the phase formulas in place of the xi_3 operator.
struct ParticleState {
    double m{1.0};
    double mu_m{0.5};
    int s3{1};  // in {-1, 0, +1}
    Vec2 k;     // wave vector, constant along the loop
};

struct PhaseResult {
    double phi_ac{0.0};
    double delta_ncs{0.0};
    double delta_ncps{0.0};
    double total{0.0};  // = phi_ac + delta_ncs + delta_ncps
    double error_estimate{0.0};
};

/// Commutative AC phase 2 mu_m s3 closed-integral(E_1 dx_2 - E_2 dx_1).
/// Equals 2 mu_m s3 lambda_e per enclosure (loop-form Gauss law).
double commutative_phase(const loops::Loop& loop, const fields::LineChargeField& field,
                         const ParticleState& particle,
                         const quadrature::Options& opts = {});

/// NC-space correction
///   mu_m s3 theta closed-integral eps^{ij} eps^{lk} [k_i - (mu x E)_i] d_j E_l dx_k
/// with (mu x E) = 2 mu_m s3 (-E_2, E_1).
double ncs_correction(const loops::Loop& loop, const fields::LineChargeField& field,
                      const ParticleState& particle, double theta,
                      const quadrature::Options& opts = {});

/// NC-phase-space correction: area term (theta_bar/2 alpha^2)
/// closed-integral(x_2 dx_1 - x_1 dx_2) in closed form, plus the
/// (1/alpha^2 - 1)-weighted NC-space integral with k replaced by k/alpha.
double ncps_correction(const loops::Loop& loop, const fields::LineChargeField& field,
                       const ParticleState& particle, const moyal::NCParams& nc,
                       const quadrature::Options& opts = {});

PhaseResult total_phase(const loops::Loop& loop, const fields::LineChargeField& field,
                        const ParticleState& particle, const moyal::NCParams& nc,
                        const quadrature::Options& opts = {});

/// Winding number of the loop about a point. Throws PointOnLoop.
int winding_number(const loops::Loop& loop, Vec2 point);

/// Throws SingularPath unless the loop clears every filament.
void check_path_clearance(const loops::Loop& loop, const fields::LineChargeField& field);

}  // namespace acphase::phase
