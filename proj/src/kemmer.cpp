#include "acphase/kemmer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "acphase/errors.hpp"

namespace acphase::kemmer {

int levi_civita4(int a, int b, int c, int d) {
    const int idx[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) sign = -sign;
        }
    return sign;
}

GaussianMatrix KemmerRep::beta_lower(int nu) const {
    return metric[nu] == 1 ? beta_upper[nu] : -beta_upper[nu];
}

namespace {

// (S^j)_{kl} = -i eps_{jkl}, 0-based on 3x3 blocks.
void put_spin_block(GaussianMatrix& m, int row0, int col0, int j, int sign) {
    static const int eps3[3][3][3] = {
        {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
        {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
        {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
    };
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            int e = eps3[j][k][l];
            if (e) m.at(row0 + k, col0 + l) = GaussInt{0, -e * sign};
        }
}

Eigen::MatrixXcd to_eigen(const std::vector<std::complex<double>>& flat, int dim) {
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = flat[static_cast<size_t>(i) * dim + j];
    return m;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

KemmerRep build_betas() {
    KemmerRep rep;
    // beta^0: identity blocks coupling the first and third 3-blocks.
    GaussianMatrix b0(10);
    for (int k = 0; k < 3; ++k) {
        b0.at(k, 6 + k) = GaussInt{1};
        b0.at(6 + k, k) = GaussInt{1};
    }
    rep.beta_upper[0] = b0;

    // beta^j: -i K^j couplings to the scalar slot, S^j blocks between the
    // second and third 3-blocks.
    for (int j = 0; j < 3; ++j) {
        GaussianMatrix b(10);
        b.at(j, 9) = GaussInt{0, -1};
        b.at(9, j) = GaussInt{0, -1};
        put_spin_block(b, 3, 6, j, +1);
        put_spin_block(b, 6, 3, j, -1);
        rep.beta_upper[j + 1] = b;
    }
    return rep;
}

AlgebraReport verify_beta_algebra(const KemmerRep& rep) {
    AlgebraReport report;
    std::array<GaussianMatrix, 4> bl;
    for (int nu = 0; nu < 4; ++nu) bl[nu] = rep.beta_lower(nu);

    for (int nu = 0; nu < 4; ++nu)
        for (int lam = 0; lam < 4; ++lam)
            for (int rho = 0; rho < 4; ++rho) {
                GaussianMatrix lhs = bl[nu] * bl[lam] * bl[rho] + bl[rho] * bl[lam] * bl[nu];
                GaussianMatrix rhs(10);
                if (lam == rho) rhs = rhs + bl[nu] * GaussInt{rep.metric[lam]};
                if (nu == lam) rhs = rhs + bl[rho] * GaussInt{rep.metric[nu]};
                if (!(lhs == rhs)) report.violations.push_back({nu, lam, rho});
            }
    return report;
}

std::array<std::array<HalfGaussianMatrix, 4>, 4> spin_tensor(const KemmerRep& rep) {
    std::array<std::array<HalfGaussianMatrix, 4>, 4> s;
    for (int lam = 0; lam < 4; ++lam)
        for (int rho = 0; rho < 4; ++rho)
            s[lam][rho] =
                HalfGaussianMatrix{rep.beta_lower(lam).commutator(rep.beta_lower(rho))};
    return s;
}

std::array<GaussianMatrix, 4> xi(const KemmerRep& rep) {
    std::array<GaussianMatrix, 4> result;
    for (int nu = 0; nu < 4; ++nu) {
        GaussianMatrix sum(10);
        for (int lam = 0; lam < 4; ++lam)
            for (int rho = 0; rho < 4; ++rho)
                for (int sig = 0; sig < 4; ++sig) {
                    int e = levi_civita4(nu, lam, rho, sig);
                    if (!e) continue;
                    GaussianMatrix term =
                        rep.beta_upper[lam] * rep.beta_upper[rho] * rep.beta_upper[sig];
                    sum = (e > 0) ? sum + term : sum - term;
                }
        auto half = (sum * GaussInt{0, 1}).try_half();
        if (!half) {
            std::ostringstream os;
            os << "xi_" << nu << ": Levi-Civita contraction has odd entries";
            throw OddContraction(os.str());
        }
        result[nu] = *half;
    }
    return result;
}

SpinOperators spin_operators(const KemmerRep& rep) {
    return SpinOperators{spin_tensor(rep), xi(rep)};
}

CommutatorReport commutator_condition(const KemmerRep& rep) {
    CommutatorReport r{};
    GaussianMatrix xi3 = xi(rep)[3];
    for (int nu = 0; nu < 4; ++nu)
        r.frobenius_sq[nu] = xi3.commutator(rep.beta_upper[nu]).frobenius_sq();
    return r;
}

std::vector<double> xi3_spectrum(const KemmerRep& rep) {
    GaussianMatrix xi3 = xi(rep)[3];
    auto ev = hermitian_eigenvalues(to_eigen(xi3.to_complex(), xi3.dim()));
    for (double v : ev) {
        double d = std::min({std::abs(v + 1.0), std::abs(v), std::abs(v - 1.0)});
        if (d > 1e-10) {
            std::ostringstream os;
            os << "xi_3 eigenvalue " << v << " deviates from {-1,0,+1} by " << d;
            throw SpectrumOutOfRange(os.str());
        }
    }
    return ev;
}

DiracRep spin_half_counterpart() {
    DiracRep rep;
    for (auto& g : rep.gamma) g = GaussianMatrix(4);

    // Standard Dirac basis, gamma^0 diagonal.
    rep.gamma[0].at(0, 0) = GaussInt{1};
    rep.gamma[0].at(1, 1) = GaussInt{1};
    rep.gamma[0].at(2, 2) = GaussInt{-1};
    rep.gamma[0].at(3, 3) = GaussInt{-1};

    // gamma^j = [[0, s_j], [-s_j, 0]] with the Pauli matrices s_j.
    const GaussInt pauli[3][2][2] = {
        {{GaussInt{0}, GaussInt{1}}, {GaussInt{1}, GaussInt{0}}},
        {{GaussInt{0}, GaussInt{0, -1}}, {GaussInt{0, 1}, GaussInt{0}}},
        {{GaussInt{1}, GaussInt{0}}, {GaussInt{0}, GaussInt{-1}}},
    };
    for (int j = 0; j < 3; ++j)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                rep.gamma[j + 1].at(r, 2 + c) = pauli[j][r][c];
                rep.gamma[j + 1].at(2 + r, c) = -pauli[j][r][c];
            }

    // sigma^{12} = (i/2)[gamma^1, gamma^2]; exact halving always succeeds here.
    GaussianMatrix comm = rep.gamma[1].commutator(rep.gamma[2]);
    rep.sigma12 = *(comm * GaussInt{0, 1}).try_half();
    rep.half_g0_sigma12 = HalfGaussianMatrix{rep.gamma[0] * rep.sigma12};
    return rep;
}

std::vector<double> spin_half_spectrum(const DiracRep& rep) {
    return hermitian_eigenvalues(
        to_eigen(rep.half_g0_sigma12.to_complex(), rep.half_g0_sigma12.dim()));
}

}  // namespace acphase::kemmer
