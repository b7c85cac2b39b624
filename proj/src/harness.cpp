#include "acphase/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "acphase/errors.hpp"
#include "acphase/kemmer.hpp"

namespace acphase::cli {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Check> run_algebra_checks(bool perturb) {
    namespace km = kemmer;
    std::vector<Check> checks;
    auto rep = km::build_betas();
    if (perturb) rep.beta_upper[1].at(0, 9) = GaussInt{0};

    {
        auto report = km::verify_beta_algebra(rep);
        checks.push_back({"beta_algebra_64_triples", report.ok(),
                          report.ok() ? "all 64 triples hold exactly"
                                      : std::to_string(report.violations.size()) +
                                            " violated triples"});
    }
    {
        bool ok = true;
        const auto& b0 = rep.beta_upper[0];
        if (!(b0 * b0 * b0 == b0)) ok = false;
        for (int j = 1; j < 4; ++j) {
            const auto& b = rep.beta_upper[j];
            if (!(b * b * b == -b)) ok = false;
        }
        checks.push_back({"beta_cube_identities", ok,
                          "(beta^0)^3 = beta^0, (beta^j)^3 = -beta^j"});
    }
    {
        bool ok = true;
        auto s = km::spin_tensor(rep);
        for (int l = 0; l < 4 && ok; ++l)
            for (int r = 0; r < 4 && ok; ++r)
                if (!(s[l][r] == -s[r][l])) ok = false;
        for (int l = 0; l < 4 && ok; ++l)
            if (!s[l][l].is_zero()) ok = false;
        checks.push_back({"spin_tensor_antisymmetry", ok,
                          "S_{lr} = -S_{rl}, diagonal zero, exact"});
    }

    bool xi_built = false;
    std::array<GaussianMatrix, 4> xis;
    try {
        xis = km::xi(rep);
        xi_built = true;
    } catch (const OddContraction&) {
    }

    {
        bool ok = xi_built;
        if (ok) {
            auto comm = km::commutator_condition(rep);
            ok = comm.frobenius_sq[0] == 0 && comm.frobenius_sq[1] == 0 &&
                 comm.frobenius_sq[2] == 0 && comm.frobenius_sq[3] > 0;
        }
        checks.push_back({"xi3_commutators", ok,
                          "[xi3, beta^nu] = 0 for nu<3, nonzero for nu=3"});
    }
    {
        bool ok = xi_built;
        if (ok) {
            const auto& x3 = xis[3];
            ok = (x3 * x3 * x3 == x3) && x3.trace() == GaussInt{0} && x3.is_hermitian();
        }
        checks.push_back({"xi3_cube_trace_hermiticity", ok,
                          "xi3^3 = xi3, trace 0, Hermitian"});
    }
    {
        bool ok = xi_built;
        std::string detail = "spectrum in {-1,0,+1}, symmetric multiplicities";
        if (ok) {
            try {
                auto ev = km::xi3_spectrum(rep);
                int plus = 0, minus = 0;
                for (double v : ev) {
                    if (v > 0.5) ++plus;
                    if (v < -0.5) ++minus;
                }
                ok = ev.size() == 10 && plus == minus;
            } catch (const SpectrumOutOfRange& e) {
                ok = false;
                detail = e.what();
            }
        }
        checks.push_back({"xi3_spectrum", ok, detail});
    }

    auto dirac = km::spin_half_counterpart();
    {
        bool ok = true;
        for (int mu = 0; mu < 4 && ok; ++mu)
            for (int nu = 0; nu < 4 && ok; ++nu) {
                // {gamma^mu, gamma^nu} = 2 g^{mu nu} I
                auto anti = dirac.gamma[mu] * dirac.gamma[nu] +
                            dirac.gamma[nu] * dirac.gamma[mu];
                GaussianMatrix expect(4);
                if (mu == nu)
                    expect = GaussianMatrix::identity(4) * GaussInt{2 * rep.metric[mu]};
                if (!(anti == expect)) ok = false;
            }
        checks.push_back({"dirac_clifford_relation", ok,
                          "{gamma^mu, gamma^nu} = 2 g^{mu nu}"});
    }
    {
        auto ev = km::spin_half_spectrum(dirac);
        bool ok = !ev.empty();
        double maxabs = 0.0;
        for (double v : ev) {
            if (std::min(std::abs(v - 0.5), std::abs(v + 0.5)) > 1e-10) ok = false;
            maxabs = std::max(maxabs, std::abs(v));
        }
        // spin-1 phase factor is twice the spin-1/2 one
        if (ok && xi_built) {
            double xi_max = 0.0;
            for (double v : km::xi3_spectrum(rep)) xi_max = std::max(xi_max, std::abs(v));
            ok = std::abs(xi_max / maxabs - 2.0) < 1e-9;
        }
        checks.push_back({"dirac_half_spectrum_ratio", ok,
                          "spectrum in {-1/2,+1/2}; spin-1 max eigenvalue twice as large"});
    }
    return checks;
}

}  // namespace

int cmd_verify(std::ostream& out, bool as_json, bool perturb, std::uint64_t seed) {
    auto checks = run_algebra_checks(perturb);
    bool all_ok = std::all_of(checks.begin(), checks.end(),
                              [](const Check& c) { return c.pass; });
    if (as_json) {
        json j;
        j["seed"] = seed;
        j["checks"] = json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["all_pass"] = all_ok;
        out << j.dump(2) << "\n";
    } else {
        out << "seed: " << seed << "\n";
        for (const auto& c : checks)
            out << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.detail << ")\n";
        out << (all_ok ? "all checks passed" : "ALGEBRA FAILURE") << "\n";
    }
    return all_ok ? kExitOk : kExitAlgebraFailure;
}

int cmd_phase(const RunConfig& cfg, std::ostream& out, OutputFormat format) {
    fields::LineChargeField field(cfg.filaments);
    phase::PhaseResult r;
    try {
        r = phase::total_phase(cfg.loop, field, cfg.particle, cfg.nc, cfg.quad);
    } catch (const QuadratureNoConvergence& e) {
        out << "quadrature failure: " << e.what() << "\n";
        return kExitQuadratureFailure;
    } catch (const SingularPath& e) {
        out << "quadrature failure: " << e.what() << "\n";
        return kExitQuadratureFailure;
    }
    if (format == OutputFormat::Csv) {
        out << "phi_ac,delta_ncs,delta_ncps,total,error_estimate\n"
            << fmt17(r.phi_ac) << "," << fmt17(r.delta_ncs) << "," << fmt17(r.delta_ncps)
            << "," << fmt17(r.total) << "," << fmt17(r.error_estimate) << "\n";
    } else {
        // Build the JSON from fixed-format strings so output is byte-identical
        // across runs and platforms.
        out << "{\n"
            << "  \"phi_ac\": " << fmt17(r.phi_ac) << ",\n"
            << "  \"delta_ncs\": " << fmt17(r.delta_ncs) << ",\n"
            << "  \"delta_ncps\": " << fmt17(r.delta_ncps) << ",\n"
            << "  \"total\": " << fmt17(r.total) << ",\n"
            << "  \"error_estimate\": " << fmt17(r.error_estimate) << "\n"
            << "}\n";
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.sweep) {
        out << "config error: sweep: missing\n";
        return kExitConfigError;
    }
    const SweepSpec& spec = *cfg.sweep;
    fields::LineChargeField field(cfg.filaments);

    out << spec.parameter_name() << ",phi_ac,delta_ncs,delta_ncps,total,error_estimate\n";
    for (size_t row = 0; row < spec.values.size(); ++row) {
        const double v = spec.values[row];
        RunConfig c = cfg;
        try {
            switch (spec.parameter) {
                case SweepSpec::Parameter::Theta:
                    c.nc = moyal::NCParams::make(v, cfg.nc.alpha);
                    break;
                case SweepSpec::Parameter::Alpha:
                    c.nc = moyal::NCParams::make(cfg.nc.theta, v);
                    break;
                case SweepSpec::Parameter::Radius: {
                    if (!cfg.loop.is_circle())
                        throw ConfigError("sweep.parameter = radius needs a circle loop");
                    loops::Circle circ = cfg.loop.circle();
                    circ.radius = v;
                    c.loop = loops::Loop(circ);
                    break;
                }
                case SweepSpec::Parameter::S3: {
                    const int s3 = static_cast<int>(std::lround(v));
                    if (s3 < -1 || s3 > 1 || s3 != v)
                        throw ConfigError("sweep s3 values must be -1, 0, or 1");
                    c.particle.s3 = s3;
                    break;
                }
            }
            auto r = phase::total_phase(c.loop, field, c.particle, c.nc, c.quad);
            out << fmt17(v) << "," << fmt17(r.phi_ac) << "," << fmt17(r.delta_ncs) << ","
                << fmt17(r.delta_ncps) << "," << fmt17(r.total) << ","
                << fmt17(r.error_estimate) << "\n";
        } catch (const ConfigError& e) {
            out << "config error at sweep row " << row << ": " << e.what() << "\n";
            return kExitConfigError;
        } catch (const Error& e) {
            out << "failure at sweep row " << row << ": " << e.what() << "\n";
            return kExitQuadratureFailure;
        }
    }
    return kExitOk;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::uint64_t seed) {
    fields::LineChargeField field(cfg.filaments);

    std::vector<double> grid = cfg.convergence_theta_grid;
    if (grid.empty()) {
        // default: 7 log-spaced values over [1e-4, 1e-1]
        for (int i = 0; i < 7; ++i) grid.push_back(std::pow(10.0, -4.0 + 0.5 * i));
    }
    Vec2 p = cfg.particle.k;
    if (p.norm_sq() == 0.0) p = {1.0, 0.5};

    out << "seed: " << seed << "\n";

    // Spot-check the analytic Jacobian against finite differences at random
    // off-source points before trusting the shift forms.
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        int checked = 0;
        double worst = 0.0;
        while (checked < 10) {
            const Vec2 x{u(rng), u(rng)};
            if (field.clearance(x) < 0.3) continue;
            const Mat2 g = field.grad_E(x);
            const double h = 1e-6;
            const Vec2 dx1 = (field.eval_E({x.x + h, x.y}) - field.eval_E({x.x - h, x.y})) *
                             (1.0 / (2.0 * h));
            const Vec2 dx2 = (field.eval_E({x.x, x.y + h}) - field.eval_E({x.x, x.y - h})) *
                             (1.0 / (2.0 * h));
            worst = std::max({worst, std::abs(dx1.x - g.m[0][0]), std::abs(dx1.y - g.m[0][1]),
                              std::abs(dx2.x - g.m[1][0]), std::abs(dx2.y - g.m[1][1])});
            ++checked;
        }
        out << "jacobian_fd_check_max_abs_dev: " << fmt17(worst) << "\n";
    }

    moyal::ConvergenceReport report;
    try {
        report = moyal::star_shift_equivalence(field, p, grid);
    } catch (const InsufficientGrid& e) {
        out << "convergence failure: InsufficientGrid: " << e.what() << "\n";
        return kExitConvergenceFailure;
    } catch (const DegenerateFit& e) {
        out << "convergence failure: DegenerateFit: " << e.what() << "\n";
        return kExitConvergenceFailure;
    }

    out << "theta,delta\n";
    for (size_t i = 0; i < report.thetas.size(); ++i)
        out << fmt17(report.thetas[i]) << "," << fmt17(report.deltas[i]) << "\n";

    if (report.exact_agreement) {
        out << "exact agreement, delta below noise floor\n";
        return kExitOk;
    }
    out << "fitted_slope: " << fmt17(report.fitted_slope) << "\n";
    if (report.fitted_slope < 1.9) {
        out << "convergence failure: fitted slope below 1.9\n";
        return kExitConvergenceFailure;
    }
    return kExitOk;
}

}  // namespace acphase::cli
