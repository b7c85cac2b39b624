#pragma once

#include <array>
#include <vector>

#include "acphase/gaussian.hpp"

namespace acphase::kemmer {

/// Sign of the 4d Levi-Civita symbol with all-lower indices, eps(0,1,2,3) = +1.
int levi_civita4(int a, int b, int c, int d);

/// The four 10x10 beta matrices (upper index) of the spin-1 representation,
/// with metric diag(+1,-1,-1,-1). Component ordering: three 3-blocks, then the
/// scalar slot (rows/cols 0-2, 3-5, 6-8, 9).
struct KemmerRep {
    std::array<GaussianMatrix, 4> beta_upper;
    std::array<int, 4> metric{+1, -1, -1, -1};

    /// beta with the index lowered: beta_nu = g_{nu nu} beta^nu (no sum).
    GaussianMatrix beta_lower(int nu) const;
};

KemmerRep build_betas();

/// Violations of the trilinear relation
///   b_nu b_lam b_rho + b_rho b_lam b_nu = b_nu g_{lam rho} + b_rho g_{nu lam}
/// checked over all 64 lower-index triples.
struct AlgebraReport {
    std::vector<std::array<int, 3>> violations;
    bool ok() const { return violations.empty(); }
};

AlgebraReport verify_beta_algebra(const KemmerRep& rep);

struct SpinOperators {
    /// S_{lam rho} = (1/2)[beta_lam, beta_rho], lower indices, exact
    /// half-Gaussian entries.
    std::array<std::array<HalfGaussianMatrix, 4>, 4> spin_tensor;
    /// xi_nu = (i/2) eps_{nu lam rho sig} beta^lam beta^rho beta^sig, exact.
    std::array<GaussianMatrix, 4> xi;
};

/// Spin tensor only, stored exactly at twice its value.
std::array<std::array<HalfGaussianMatrix, 4>, 4> spin_tensor(const KemmerRep& rep);

/// Pseudo-vector xi only. Throws OddContraction if the exact halving fails.
std::array<GaussianMatrix, 4> xi(const KemmerRep& rep);

SpinOperators spin_operators(const KemmerRep& rep);

/// Frobenius norm (squared, exact) of [xi_3, beta^nu] for each nu. Zero for
/// nu in {0,1,2}, nonzero for nu = 3 with the paper matrices.
struct CommutatorReport {
    std::array<std::int64_t, 4> frobenius_sq;
};

CommutatorReport commutator_condition(const KemmerRep& rep);

/// Eigenvalues of xi_3 in ascending order (10 values). Throws
/// SpectrumOutOfRange if any eigenvalue is farther than 1e-10 from {-1,0,+1}.
std::vector<double> xi3_spectrum(const KemmerRep& rep);

/// Standard Dirac representation (diagonal gamma^0) with
/// sigma^{12} = (i/2)[gamma^1, gamma^2].
struct DiracRep {
    std::array<GaussianMatrix, 4> gamma;
    GaussianMatrix sigma12;
    HalfGaussianMatrix half_g0_sigma12;  // (1/2) gamma^0 sigma^{12}, exact
};

DiracRep spin_half_counterpart();

/// Eigenvalues of (1/2) gamma^0 sigma^{12}, ascending (4 values).
std::vector<double> spin_half_spectrum(const DiracRep& rep);

}  // namespace acphase::kemmer
