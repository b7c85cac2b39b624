#pragma once

#include <utility>
#include <vector>

#include "acphase/geometry.hpp"

namespace acphase::fields {

/// Clearance below which field evaluation refuses to proceed.
inline constexpr double kSingularClearance = 1e-9;

/// Uniformly charged infinite filament perpendicular to the plane.
struct Filament {
    Vec2 position;
    double lambda_e{0.0};  // charge per unit length, natural units
};

/// Superposition of filament fields, E = sum lambda/(2pi) * rhat/r.
/// The normalization makes the loop-form Gauss law read
/// closed-integral(E_1 dx_2 - E_2 dx_1) = lambda_e per enclosure.
class LineChargeField {
public:
    LineChargeField() = default;
    explicit LineChargeField(std::vector<Filament> filaments)
        : filaments_(std::move(filaments)) {}

    const std::vector<Filament>& filaments() const { return filaments_; }

    /// Throws SingularPoint if the point is within kSingularClearance of a filament.
    Vec2 eval_E(Vec2 point) const;

    /// Analytic Jacobian, entry [j][l] = d_j E_l. Symmetric and traceless
    /// away from the sources. Throws SingularPoint as eval_E.
    Mat2 grad_E(Vec2 point) const;

    /// (F^{01}, F^{02}) = (E_1, E_2) by convention.
    std::pair<double, double> f_tensor_0l(Vec2 point) const;

    /// Distance to the nearest filament (infinity if there are none).
    double clearance(Vec2 point) const;

private:
    std::vector<Filament> filaments_;
};

}  // namespace acphase::fields
