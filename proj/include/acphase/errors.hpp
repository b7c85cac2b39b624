#pragma once

#include <stdexcept>
#include <string>

namespace acphase {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact-arithmetic failures in the Kemmer algebra layer.
struct OddContraction : Error {
    using Error::Error;
};
struct SpectrumOutOfRange : Error {
    using Error::Error;
};

// Field / geometry evaluation.
struct SingularPoint : Error {
    using Error::Error;
};
struct SingularPath : Error {
    using Error::Error;
};
struct PointOnLoop : Error {
    using Error::Error;
};

// Numerics.
struct QuadratureNoConvergence : Error {
    using Error::Error;
};
struct DegenerateFit : Error {
    using Error::Error;
};
struct InsufficientGrid : Error {
    using Error::Error;
};

// Configuration / CLI.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace acphase
