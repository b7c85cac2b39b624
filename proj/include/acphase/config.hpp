#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acphase/fields.hpp"
#include "acphase/loop.hpp"
#include "acphase/moyal.hpp"
#include "acphase/phase.hpp"

namespace acphase::cli {

/// Sweep over one parameter; values either explicit or generated from a
/// linear/log range.
struct SweepSpec {
    enum class Parameter { Theta, Alpha, Radius, S3 };

    Parameter parameter{Parameter::Theta};
    std::vector<double> values;

    static Parameter parse_parameter(const std::string& name);
    std::string parameter_name() const;
};

/// Full run configuration loaded from a JSON file (schema version 1).
struct RunConfig {
    std::vector<fields::Filament> filaments;
    loops::Loop loop{loops::Circle{}};
    phase::ParticleState particle;
    moyal::NCParams nc;
    quadrature::Options quad;
    std::optional<SweepSpec> sweep;
    std::vector<double> convergence_theta_grid;  // empty = default log grid

    /// Parse and validate. Throws ConfigError with a message naming the
    /// offending field.
    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_file(const std::string& path);

    std::string to_json_text() const;
};

}  // namespace acphase::cli
