#include "acphase/phase.hpp"

#include <sstream>

#include "acphase/errors.hpp"

namespace acphase::phase {

namespace {

// closed-integral(E_1 dx_2 - E_2 dx_1), no prefactor.
quadrature::Result gauss_law_integral(const loops::Loop& loop,
                                      const fields::LineChargeField& field,
                                      const quadrature::Options& opts) {
    return loop.integrate(
        [&](Vec2 x, Vec2 t) {
            const Vec2 e = field.eval_E(x);
            return e.x * t.y - e.y * t.x;
        },
        opts);
}

// closed-integral eps^{ij} eps^{lk} [k_i - (mu x E)_i] d_j E_l dx_k, no prefactor.
// (mu x E) = 2 mu_m s3 (-E_2, E_1).
quadrature::Result ncs_integral(const loops::Loop& loop,
                                const fields::LineChargeField& field, Vec2 k,
                                double mu_m, int s3,
                                const quadrature::Options& opts) {
    return loop.integrate(
        [&](Vec2 x, Vec2 t) {
            const Vec2 e = field.eval_E(x);
            const Mat2 g = field.grad_E(x);
            const Vec2 mu_cross_e = 2.0 * mu_m * s3 * Vec2{-e.y, e.x};
            const Vec2 q = k - mu_cross_e;
            // D_l = eps^{ij} q_i d_j E_l = q_1 d_2 E_l - q_2 d_1 E_l
            const double d1 = q.x * g.m[1][0] - q.y * g.m[0][0];
            const double d2 = q.x * g.m[1][1] - q.y * g.m[0][1];
            return d1 * t.y - d2 * t.x;
        },
        opts);
}

}  // namespace

void check_path_clearance(const loops::Loop& loop,
                          const fields::LineChargeField& field) {
    for (const auto& f : field.filaments()) {
        if (loop.min_distance(f.position) < fields::kSingularClearance) {
            std::ostringstream os;
            os << "loop passes within " << fields::kSingularClearance
               << " of the filament at (" << f.position.x << ", " << f.position.y << ")";
            throw SingularPath(os.str());
        }
    }
}

double commutative_phase(const loops::Loop& loop, const fields::LineChargeField& field,
                         const ParticleState& particle,
                         const quadrature::Options& opts) {
    check_path_clearance(loop, field);
    if (particle.s3 == 0) return 0.0;
    return 2.0 * particle.mu_m * particle.s3 * gauss_law_integral(loop, field, opts).value;
}

double ncs_correction(const loops::Loop& loop, const fields::LineChargeField& field,
                      const ParticleState& particle, double theta,
                      const quadrature::Options& opts) {
    check_path_clearance(loop, field);
    const double prefactor = particle.mu_m * particle.s3 * theta;
    if (prefactor == 0.0) return 0.0;
    return prefactor *
           ncs_integral(loop, field, particle.k, particle.mu_m, particle.s3, opts).value;
}

double ncps_correction(const loops::Loop& loop, const fields::LineChargeField& field,
                       const ParticleState& particle, const moyal::NCParams& nc,
                       const quadrature::Options& opts) {
    check_path_clearance(loop, field);
    if (nc.alpha == 1.0) return 0.0;
    const double a2 = nc.alpha * nc.alpha;
    const double area_term =
        nc.theta_bar / (2.0 * a2) * loop.signed_double_area_integral();
    const double prefactor = (1.0 / a2 - 1.0) * particle.mu_m * particle.s3 * nc.theta;
    if (prefactor == 0.0) return area_term;
    const Vec2 k_prime = particle.k * (1.0 / nc.alpha);
    return area_term +
           prefactor *
               ncs_integral(loop, field, k_prime, particle.mu_m, particle.s3, opts).value;
}

PhaseResult total_phase(const loops::Loop& loop, const fields::LineChargeField& field,
                        const ParticleState& particle, const moyal::NCParams& nc,
                        const quadrature::Options& opts) {
    check_path_clearance(loop, field);
    PhaseResult r;
    double err = 0.0;

    if (particle.s3 != 0) {
        auto g = gauss_law_integral(loop, field, opts);
        r.phi_ac = 2.0 * particle.mu_m * particle.s3 * g.value;
        err += std::abs(2.0 * particle.mu_m * particle.s3) * g.error_estimate;
    }

    const double ncs_pref = particle.mu_m * particle.s3 * nc.theta;
    if (ncs_pref != 0.0) {
        auto i = ncs_integral(loop, field, particle.k, particle.mu_m, particle.s3, opts);
        r.delta_ncs = ncs_pref * i.value;
        err += std::abs(ncs_pref) * i.error_estimate;
    }

    if (nc.alpha != 1.0) {
        const double a2 = nc.alpha * nc.alpha;
        r.delta_ncps = nc.theta_bar / (2.0 * a2) * loop.signed_double_area_integral();
        const double pref = (1.0 / a2 - 1.0) * particle.mu_m * particle.s3 * nc.theta;
        if (pref != 0.0) {
            const Vec2 k_prime = particle.k * (1.0 / nc.alpha);
            auto i = ncs_integral(loop, field, k_prime, particle.mu_m, particle.s3, opts);
            r.delta_ncps += pref * i.value;
            err += std::abs(pref) * i.error_estimate;
        }
    }

    r.total = r.phi_ac + r.delta_ncs + r.delta_ncps;
    r.error_estimate = err;
    return r;
}

int winding_number(const loops::Loop& loop, Vec2 point) {
    return loop.winding_number(point);
}

}  // namespace acphase::phase
