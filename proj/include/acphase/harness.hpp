#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "acphase/config.hpp"

namespace acphase::cli {

// Exit codes shared by the CLI and tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAlgebraFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitQuadratureFailure = 3;
inline constexpr int kExitConvergenceFailure = 4;

enum class OutputFormat { Text, Json, Csv };

/// Exact-algebra verification suite. perturb zeroes one beta^1 entry first
/// (test hook, debug builds only). Returns kExitOk or kExitAlgebraFailure.
int cmd_verify(std::ostream& out, bool json, bool perturb, std::uint64_t seed);

/// Single phase computation. Returns kExitOk or kExitQuadratureFailure.
int cmd_phase(const RunConfig& cfg, std::ostream& out, OutputFormat format);

/// Parameter sweep; CSV rows in sweep order. Returns kExitOk or
/// kExitQuadratureFailure (aborting with a row-index message).
int cmd_sweep(const RunConfig& cfg, std::ostream& out);

/// Star-vs-shift convergence study. Returns kExitOk or
/// kExitConvergenceFailure.
int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::uint64_t seed);

/// %.17g formatting used for all CSV output.
std::string fmt17(double v);

}  // namespace acphase::cli
