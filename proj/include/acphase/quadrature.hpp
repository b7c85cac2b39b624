#pragma once

#include <cstdint>
#include <functional>

namespace acphase::quadrature {

struct Options {
    double rel_tol{1e-10};
    std::int64_t max_panels{1000000};
    double abs_tol{1e-13};  // floor for integrals that are genuinely zero
};

struct Result {
    double value{0.0};
    double error_estimate{0.0};
    std::int64_t panels{0};
};

/// Adaptive composite 15-point Gauss-Legendre integration with interval
/// bisection. A panel is accepted when refining it once changes the value by
/// less than rel_tol * |value| (or abs_tol). Deterministic: identical inputs
/// give bit-identical results. Throws QuadratureNoConvergence when the panel
/// budget is exhausted.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

}  // namespace acphase::quadrature
