#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "acphase/errors.hpp"
#include "acphase/phase.hpp"

using namespace acphase;
using namespace acphase::phase;

namespace {

constexpr double kPi = std::numbers::pi;

// Dense trapezoid-rule line integral over a circle, independent of the
// adaptive quadrature path.
double trapezoid_circle(const std::function<double(Vec2, Vec2)>& g, Vec2 center,
                        double radius, int winding, long panels) {
    const double omega = 2.0 * kPi * winding;
    auto f = [&](double t) {
        const double phi = omega * t;
        const Vec2 x = center + Vec2{radius * std::cos(phi), radius * std::sin(phi)};
        const Vec2 tan{-radius * omega * std::sin(phi), radius * omega * std::cos(phi)};
        return g(x, tan);
    };
    double sum = 0.5 * (f(0.0) + f(1.0));
    for (long i = 1; i < panels; ++i) sum += f(static_cast<double>(i) / panels);
    return sum / panels;
}

// The NC-space integrand, written out independently for the oracle.
std::function<double(Vec2, Vec2)> ncs_integrand(const fields::LineChargeField& field,
                                                Vec2 k, double mu_m, int s3) {
    return [&field, k, mu_m, s3](Vec2 x, Vec2 t) {
        const Vec2 e = field.eval_E(x);
        const Mat2 g = field.grad_E(x);
        const Vec2 q{k.x + 2.0 * mu_m * s3 * e.y, k.y - 2.0 * mu_m * s3 * e.x};
        const double d1 = q.x * g.m[1][0] - q.y * g.m[0][0];
        const double d2 = q.x * g.m[1][1] - q.y * g.m[0][1];
        return d1 * t.y - d2 * t.x;
    };
}

loops::Polygon regular_ngon(int n, double rx, double ry, Vec2 c = {0.0, 0.0}) {
    loops::Polygon p;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * kPi * i / n;
        p.vertices.push_back({c.x + rx * std::cos(a), c.y + ry * std::sin(a)});
    }
    return p;
}

const fields::LineChargeField unit_filament({{{0.0, 0.0}, 1.0}});
const ParticleState standard_particle{1.0, 0.5, 1, {1.0, 0.0}};

}  // namespace

TEST_CASE("commutative phase: Gauss-law value") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    // 2 mu_m s3 lambda_e = 2 * 0.5 * 1 * 1 = 1
    CHECK(commutative_phase(circle, unit_filament, standard_particle) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("commutative phase: non-enclosing loop and s3 = 0") {
    loops::Loop far(loops::Circle{{5, 5}, 1.0, 1});
    CHECK(std::abs(commutative_phase(far, unit_filament, standard_particle)) < 1e-10);

    ParticleState p0 = standard_particle;
    p0.s3 = 0;
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    CHECK(commutative_phase(circle, unit_filament, p0) == 0.0);
}

TEST_CASE("commutative phase: winding-2 doubles the value") {
    loops::Loop w1(loops::Circle{{0.2, 0.1}, 1.5, 1});
    loops::Loop w2(loops::Circle{{0.2, 0.1}, 1.5, 2});
    const double p1 = commutative_phase(w1, unit_filament, standard_particle);
    const double p2 = commutative_phase(w2, unit_filament, standard_particle);
    CHECK(p2 == doctest::Approx(2.0 * p1).epsilon(1e-8));
}

TEST_CASE("commutative phase: topological invariance across loop shapes") {
    ParticleState p = standard_particle;
    p.mu_m = 0.8;
    fields::LineChargeField field({{{0.1, -0.05}, 1.3}});
    const double expect = 2.0 * p.mu_m * p.s3 * 1.3;

    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    loops::Loop ellipse64(regular_ngon(64, 1.4, 0.8));
    loops::Loop square(loops::Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}});

    for (const auto* loop : {&circle, &ellipse64, &square}) {
        const double v = commutative_phase(*loop, field, p);
        CHECK(v == doctest::Approx(expect).epsilon(1e-8));
    }
}

TEST_CASE("commutative phase: linearity in s3") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    ParticleState plus = standard_particle, minus = standard_particle;
    minus.s3 = -1;
    const double vp = commutative_phase(circle, unit_filament, plus);
    const double vm = commutative_phase(circle, unit_filament, minus);
    CHECK(vp == doctest::Approx(-vm).epsilon(1e-12));
}

TEST_CASE("singular path is rejected") {
    loops::Loop through(loops::Circle{{1.0, 0.0}, 1.0, 1});  // passes through origin
    CHECK_THROWS_AS(commutative_phase(through, unit_filament, standard_particle),
                    SingularPath);
}

TEST_CASE("ncs correction: trivial zeros") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    CHECK(ncs_correction(circle, unit_filament, standard_particle, 0.0) == 0.0);

    ParticleState p0 = standard_particle;
    p0.s3 = 0;
    p0.k = {0.0, 0.0};
    CHECK(ncs_correction(circle, unit_filament, p0, 0.01) == 0.0);
}

TEST_CASE("ncs correction matches the dense trapezoid oracle") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    const double theta = 0.01;
    const double v = ncs_correction(circle, unit_filament, standard_particle, theta);

    const double oracle =
        standard_particle.mu_m * standard_particle.s3 * theta *
        trapezoid_circle(ncs_integrand(unit_filament, standard_particle.k,
                                       standard_particle.mu_m, standard_particle.s3),
                         {0, 0}, 1.0, 1, 1000000);
    CHECK(v == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("ncs correction is exactly linear in theta") {
    loops::Loop circle(loops::Circle{{0.3, 0.0}, 1.2, 1});
    const double a = ncs_correction(circle, unit_filament, standard_particle, 0.01);
    const double b = ncs_correction(circle, unit_filament, standard_particle, 0.02);
    CHECK(b / a == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("ncs correction: affine structure in s3") {
    loops::Loop circle(loops::Circle{{0.3, 0.0}, 1.2, 1});
    const double theta = 0.01;
    ParticleState plus = standard_particle, minus = standard_particle, zero = standard_particle;
    minus.s3 = -1;
    zero.s3 = 0;

    const double np = ncs_correction(circle, unit_filament, plus, theta);
    const double nm = ncs_correction(circle, unit_filament, minus, theta);
    const double nz = ncs_correction(circle, unit_filament, zero, theta);
    CHECK(nz == 0.0);

    // Pure s3^2 part via the oracle: the (mu x E) term alone at s3 = 1.
    auto quad_part = [&](Vec2 x, Vec2 t) {
        const Vec2 e = unit_filament.eval_E(x);
        const Mat2 g = unit_filament.grad_E(x);
        const Vec2 q{2.0 * plus.mu_m * e.y, -2.0 * plus.mu_m * e.x};
        const double d1 = q.x * g.m[1][0] - q.y * g.m[0][0];
        const double d2 = q.x * g.m[1][1] - q.y * g.m[0][1];
        return d1 * t.y - d2 * t.x;
    };
    const double q_oracle = plus.mu_m * theta *
                            trapezoid_circle(quad_part, {0.3, 0.0}, 1.2, 1, 200000);
    CHECK(np + nm - 2.0 * nz == doctest::Approx(2.0 * q_oracle).epsilon(1e-5));
}

TEST_CASE("ncps correction: alpha = 1 gives exactly zero") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    auto nc = moyal::NCParams::make(0.01, 1.0);
    CHECK(ncps_correction(circle, unit_filament, standard_particle, nc) == 0.0);
}

TEST_CASE("ncps area term on the unit circle") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    const double theta = 0.05, alpha = 0.9;
    auto nc = moyal::NCParams::make(theta, alpha);

    ParticleState p = standard_particle;
    p.s3 = 0;
    p.k = {0.0, 0.0};
    // s3 = 0, k = 0: only the area term survives -> -pi theta_bar / alpha^2
    const double v = ncps_correction(circle, unit_filament, p, nc);
    const double expect = -kPi * nc.theta_bar / (alpha * alpha);
    CHECK(v == doctest::Approx(expect).epsilon(1e-10));

    // cross-check against a 10^4-gon shoelace
    loops::Loop ngon(regular_ngon(10000, 1.0, 1.0));
    const double v2 = ncps_correction(ngon, unit_filament, p, nc);
    CHECK(v2 == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("ncps correction vanishes monotonically as alpha -> 1") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    const double theta = 0.01;
    double first = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (double alpha : {0.99, 0.999, 0.9999}) {
        auto nc = moyal::NCParams::make(theta, alpha);
        const double v =
            std::abs(ncps_correction(circle, unit_filament, standard_particle, nc));
        CHECK(v < prev);
        if (first == 0.0) first = v;
        prev = v;
    }
    CHECK(prev < first / 50.0);
}

TEST_CASE("total phase assembly") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});

    SUBCASE("commutative limit") {
        auto nc = moyal::NCParams::make(0.0, 1.0);
        auto r = total_phase(circle, unit_filament, standard_particle, nc);
        CHECK(r.delta_ncs == 0.0);
        CHECK(r.delta_ncps == 0.0);
        CHECK(r.total == r.phi_ac);
        CHECK(r.phi_ac == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("NC space only") {
        auto nc = moyal::NCParams::make(0.01, 1.0);
        auto r = total_phase(circle, unit_filament, standard_particle, nc);
        CHECK(r.delta_ncps == 0.0);
        CHECK(r.delta_ncs ==
              ncs_correction(circle, unit_filament, standard_particle, 0.01));
        CHECK(r.total == r.phi_ac + r.delta_ncs);
    }
    SUBCASE("generic NC phase space") {
        auto nc = moyal::NCParams::make(0.01, 0.95);
        auto r = total_phase(circle, unit_filament, standard_particle, nc);
        CHECK(r.phi_ac == commutative_phase(circle, unit_filament, standard_particle));
        CHECK(r.delta_ncs ==
              ncs_correction(circle, unit_filament, standard_particle, 0.01));
        CHECK(r.delta_ncps ==
              ncps_correction(circle, unit_filament, standard_particle, nc));
        CHECK(r.total == r.phi_ac + r.delta_ncs + r.delta_ncps);
    }
}

TEST_CASE("winding_number operation") {
    loops::Loop circle(loops::Circle{{0, 0}, 1.0, 1});
    CHECK(winding_number(circle, {0, 0}) == 1);
    CHECK(winding_number(circle, {5, 5}) == 0);
    loops::Loop twice(loops::Circle{{0, 0}, 1.0, 2});
    CHECK(winding_number(twice, {0, 0}) == 2);
    CHECK_THROWS_AS(winding_number(circle, {1, 0}), PointOnLoop);
}

TEST_CASE("adaptive quadrature matches the trapezoid oracle on the Gauss integrand") {
    fields::LineChargeField field({{{0.4, 0.2}, 1.0}});
    loops::Loop circle(loops::Circle{{0, 0}, 1.5, 1});
    const double v = commutative_phase(circle, field, standard_particle);
    auto gauss = [&](Vec2 x, Vec2 t) {
        const Vec2 e = field.eval_E(x);
        return e.x * t.y - e.y * t.x;
    };
    const double oracle = 2.0 * standard_particle.mu_m * standard_particle.s3 *
                          trapezoid_circle(gauss, {0, 0}, 1.5, 1, 1000000);
    CHECK(v == doctest::Approx(oracle).epsilon(1e-6));
}
