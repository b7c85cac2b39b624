#include "acphase/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "acphase/errors.hpp"

namespace acphase::cli {

using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(ctx + "." + key + ": missing or not a number");
    return j[key].get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError(key + ": not a number");
    return j[key].get<double>();
}

loops::Loop parse_loop(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ConfigError("loop: missing \"type\" (circle|polygon)");
    const std::string type = j["type"].get<std::string>();
    if (type == "circle") {
        loops::Circle c;
        c.center = {require_number(j, "cx", "loop"), require_number(j, "cy", "loop")};
        c.radius = require_number(j, "r", "loop");
        if (c.radius <= 0.0) throw ConfigError("loop.r: must be positive");
        if (j.contains("winding")) {
            if (!j["winding"].is_number_integer())
                throw ConfigError("loop.winding: must be an integer");
            c.winding = j["winding"].get<int>();
        }
        return loops::Loop(c);
    }
    if (type == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw ConfigError("loop.vertices: missing or not an array");
        loops::Polygon p;
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2)
                throw ConfigError("loop.vertices: each vertex must be [x, y]");
            p.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        if (p.vertices.size() < 3) throw ConfigError("loop.vertices: need at least 3");
        return loops::Loop(p);
    }
    throw ConfigError("loop.type: unknown type \"" + type + "\"");
}

}  // namespace

SweepSpec::Parameter SweepSpec::parse_parameter(const std::string& name) {
    if (name == "theta") return Parameter::Theta;
    if (name == "alpha") return Parameter::Alpha;
    if (name == "radius") return Parameter::Radius;
    if (name == "s3") return Parameter::S3;
    throw ConfigError("sweep.parameter: must be one of theta|alpha|radius|s3");
}

std::string SweepSpec::parameter_name() const {
    switch (parameter) {
        case Parameter::Theta: return "theta";
        case Parameter::Alpha: return "alpha";
        case Parameter::Radius: return "radius";
        case Parameter::S3: return "s3";
    }
    return "?";
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }

    if (!j.contains("schema") || !j["schema"].is_number_integer() ||
        j["schema"].get<int>() != 1)
        throw ConfigError("schema: missing or unsupported (expected 1)");

    RunConfig cfg;

    if (!j.contains("filaments") || !j["filaments"].is_array())
        throw ConfigError("filaments: missing or not an array");
    for (const auto& f : j["filaments"]) {
        fields::Filament fil;
        fil.position = {require_number(f, "x", "filaments"),
                        require_number(f, "y", "filaments")};
        fil.lambda_e = require_number(f, "lambda_e", "filaments");
        cfg.filaments.push_back(fil);
    }

    if (!j.contains("loop")) throw ConfigError("loop: missing");
    cfg.loop = parse_loop(j["loop"]);

    if (j.contains("particle")) {
        const auto& p = j["particle"];
        cfg.particle.m = number_or(p, "m", 1.0);
        if (cfg.particle.m <= 0.0) throw ConfigError("particle.m: must be positive");
        cfg.particle.mu_m = number_or(p, "mu_m", 0.5);
        if (p.contains("s3")) {
            if (!p["s3"].is_number_integer())
                throw ConfigError("particle.s3: must be an integer");
            cfg.particle.s3 = p["s3"].get<int>();
        }
        if (cfg.particle.s3 < -1 || cfg.particle.s3 > 1)
            throw ConfigError("particle.s3: must be -1, 0, or 1");
        cfg.particle.k = {number_or(p, "kx", 0.0), number_or(p, "ky", 0.0)};
    }

    double theta = 0.0, alpha = 1.0;
    if (j.contains("nc")) {
        theta = number_or(j["nc"], "theta", 0.0);
        alpha = number_or(j["nc"], "alpha", 1.0);
    }
    cfg.nc = moyal::NCParams::make(theta, alpha);

    if (j.contains("quadrature")) {
        cfg.quad.rel_tol = number_or(j["quadrature"], "rel_tol", 1e-10);
        if (cfg.quad.rel_tol <= 0.0) throw ConfigError("quadrature.rel_tol: must be positive");
        cfg.quad.max_panels =
            static_cast<std::int64_t>(number_or(j["quadrature"], "max_panels", 1e6));
        if (cfg.quad.max_panels < 1) throw ConfigError("quadrature.max_panels: must be >= 1");
    }

    if (j.contains("sweep")) {
        const auto& s = j["sweep"];
        SweepSpec spec;
        if (!s.contains("parameter") || !s["parameter"].is_string())
            throw ConfigError("sweep.parameter: missing");
        spec.parameter = SweepSpec::parse_parameter(s["parameter"].get<std::string>());
        if (s.contains("values")) {
            if (!s["values"].is_array()) throw ConfigError("sweep.values: not an array");
            for (const auto& v : s["values"]) spec.values.push_back(v.get<double>());
        } else {
            const double start = require_number(s, "start", "sweep");
            const double stop = require_number(s, "stop", "sweep");
            const int count = static_cast<int>(require_number(s, "count", "sweep"));
            if (count < 2) throw ConfigError("sweep.count: must be >= 2");
            const std::string scale =
                s.contains("scale") ? s["scale"].get<std::string>() : "linear";
            if (scale == "log") {
                if (start <= 0.0 || stop <= 0.0)
                    throw ConfigError("sweep: log scale requires positive endpoints");
                const double l0 = std::log(start), l1 = std::log(stop);
                for (int i = 0; i < count; ++i)
                    spec.values.push_back(std::exp(l0 + (l1 - l0) * i / (count - 1)));
            } else if (scale == "linear") {
                for (int i = 0; i < count; ++i)
                    spec.values.push_back(start + (stop - start) * i / (count - 1));
            } else {
                throw ConfigError("sweep.scale: must be linear or log");
            }
        }
        if (spec.values.size() < 2) throw ConfigError("sweep.values: need at least 2");
        cfg.sweep = spec;
    }

    if (j.contains("convergence") && j["convergence"].contains("theta_grid")) {
        for (const auto& v : j["convergence"]["theta_grid"])
            cfg.convergence_theta_grid.push_back(v.get<double>());
    }

    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return from_json_text(os.str());
}

std::string RunConfig::to_json_text() const {
    json j;
    j["schema"] = 1;
    j["filaments"] = json::array();
    for (const auto& f : filaments)
        j["filaments"].push_back({{"x", f.position.x}, {"y", f.position.y},
                                  {"lambda_e", f.lambda_e}});
    if (loop.is_circle()) {
        const auto& c = loop.circle();
        j["loop"] = {{"type", "circle"}, {"cx", c.center.x}, {"cy", c.center.y},
                     {"r", c.radius}, {"winding", c.winding}};
    } else {
        json verts = json::array();
        for (const auto& v : loop.polygon().vertices) verts.push_back({v.x, v.y});
        j["loop"] = {{"type", "polygon"}, {"vertices", verts}};
    }
    j["particle"] = {{"m", particle.m}, {"mu_m", particle.mu_m}, {"s3", particle.s3},
                     {"kx", particle.k.x}, {"ky", particle.k.y}};
    j["nc"] = {{"theta", nc.theta}, {"alpha", nc.alpha}};
    j["quadrature"] = {{"rel_tol", quad.rel_tol},
                       {"max_panels", static_cast<double>(quad.max_panels)}};
    if (sweep) {
        json s;
        s["parameter"] = sweep->parameter_name();
        s["values"] = sweep->values;
        j["sweep"] = s;
    }
    if (!convergence_theta_grid.empty())
        j["convergence"] = {{"theta_grid", convergence_theta_grid}};
    return j.dump(2);
}

}  // namespace acphase::cli
