#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "acphase/errors.hpp"
#include "acphase/harness.hpp"

namespace {

using namespace acphase;
using namespace acphase::cli;

std::ostream& open_output(const std::string& path, std::ofstream& file_out) {
    if (path.empty()) return std::cout;
    file_out.open(path);
    if (!file_out) {
        std::cerr << "cannot open output file: " << path << "\n";
        std::exit(kExitConfigError);
    }
    return file_out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-1 Aharonov-Casher phase toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool json_flag = false;
    bool perturb = false;
    std::uint64_t seed = 12345;

    app.add_flag("--json", json_flag, "machine-readable JSON output");
    app.add_option("--seed", seed, "seed for randomized spot checks");
    app.add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the exact beta-algebra suite");
    verify->add_flag("--perturb", perturb,
                     "zero one beta^1 entry before verifying (test hook)");

    auto* phase_cmd = app.add_subcommand("phase", "compute one AC phase");
    phase_cmd->add_option("--config", config_path, "JSON config file")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep, CSV output");
    sweep_cmd->add_option("--config", config_path, "JSON config file")->required();

    auto* conv_cmd = app.add_subcommand("convergence", "star-vs-shift convergence study");
    conv_cmd->add_option("--config", config_path, "JSON config file")->required();

    CLI11_PARSE(app, argc, argv);

    std::ofstream file_out;
    std::ostream& out = open_output(out_path, file_out);

    try {
        if (verify->parsed()) {
#ifdef NDEBUG
            if (perturb) {
                std::cerr << "--perturb is available in debug builds only\n";
                return kExitConfigError;
            }
#endif
            return cmd_verify(out, json_flag, perturb, seed);
        }
        RunConfig cfg = RunConfig::from_file(config_path);
        if (phase_cmd->parsed())
            return cmd_phase(cfg, out, json_flag ? OutputFormat::Json : OutputFormat::Csv);
        if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
        if (conv_cmd->parsed()) return cmd_convergence(cfg, out, seed);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const QuadratureNoConvergence& e) {
        std::cerr << "quadrature failure: " << e.what() << "\n";
        return kExitQuadratureFailure;
    } catch (const SingularPath& e) {
        std::cerr << "quadrature failure: " << e.what() << "\n";
        return kExitQuadratureFailure;
    }
    return kExitOk;
}
