#include "acphase/quadrature.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "acphase/errors.hpp"

namespace acphase::quadrature {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half).
constexpr int kHalf = 8;
constexpr double kNodes[kHalf] = {
    0.000000000000000, 0.201194093997435, 0.394151347077563, 0.570972172608539,
    0.724417731360170, 0.848206583410427, 0.937273392400706, 0.987992518020485,
};
constexpr double kWeights[kHalf] = {
    0.202578241925561, 0.198431485327111, 0.186161000015562, 0.166269205816994,
    0.139570677926154, 0.107159220467172, 0.070366047488108, 0.030753241996117,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    double sum = kWeights[0] * f(mid);
    for (int i = 1; i < kHalf; ++i) {
        const double dx = hl * kNodes[i];
        sum += kWeights[i] * (f(mid + dx) + f(mid - dx));
    }
    return sum * hl;
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
    const double total_len = std::abs(b - a);
    Result result;

    std::vector<std::pair<double, double>> stack;
    stack.emplace_back(a, b);

    while (!stack.empty()) {
        const auto [lo, hi] = stack.back();
        stack.pop_back();

        const double coarse = gl15(f, lo, hi);
        const double mid = 0.5 * (lo + hi);
        const double fine = gl15(f, lo, mid) + gl15(f, mid, hi);
        result.panels += 3;
        if (result.panels > opts.max_panels)
            throw QuadratureNoConvergence("panel budget exhausted during adaptive quadrature");

        const double err = std::abs(fine - coarse);
        const double frac = std::abs(hi - lo) / total_len;
        if (err <= opts.rel_tol * std::abs(fine) + opts.abs_tol * frac) {
            result.value += fine;
            result.error_estimate += err;
        } else {
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
    }
    return result;
}

}  // namespace acphase::quadrature
