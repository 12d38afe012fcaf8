// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/cli/config.hpp"

#include "qwalk/errors.hpp"

namespace qwalk::cli {

using nlohmann::json;

std::string_view to_string(Command c) {
    switch (c) {
    case Command::Evolve: return "evolve";
    case Command::Sweep: return "sweep";
    case Command::Spectrum: return "spectrum";
    case Command::Verify: return "verify";
    }
    return "?";
}

std::string_view to_string(EngineKind e) {
    switch (e) {
    case EngineKind::Direct: return "direct";
    case EngineKind::Spectral: return "spectral";
    case EngineKind::Both: return "both";
    }
    return "?";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

Command parse_command(std::string_view s) {
    if (s == "evolve") return Command::Evolve;
    if (s == "sweep") return Command::Sweep;
    if (s == "spectrum") return Command::Spectrum;
    if (s == "verify") return Command::Verify;
    throw InvalidParameter("unknown command '" + std::string(s) + "'");
}

EngineKind parse_engine(std::string_view s) {
    if (s == "direct") return EngineKind::Direct;
    if (s == "spectral") return EngineKind::Spectral;
    if (s == "both") return EngineKind::Both;
    throw InvalidParameter("engine must be direct, spectral or both");
}

OutputFormat parse_format(std::string_view s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw InvalidParameter("format must be csv or json");
}

InitialSpec::Kind parse_init(std::string_view s) {
    if (s == "L" || s == "l") return InitialSpec::Kind::PureL;
    if (s == "R" || s == "r") return InitialSpec::Kind::PureR;
    if (s == "symmetric") return InitialSpec::Kind::Symmetric;
    if (s == "custom") return InitialSpec::Kind::Custom;
    throw InvalidParameter("init must be L, R, symmetric or custom");
}

CoinParams coin_params(const RunConfig &c) {
    return {c.alpha.radians, c.beta.radians, c.gamma.radians, c.theta.radians};
}

InitialSpec initial_spec(const RunConfig &c) {
    switch (c.init) {
    case InitialSpec::Kind::PureL: return InitialSpec::pure_l();
    case InitialSpec::Kind::PureR: return InitialSpec::pure_r();
    case InitialSpec::Kind::Symmetric: return InitialSpec::symmetric();
    case InitialSpec::Kind::Custom: break;
    }
    return InitialSpec::custom(c.m, c.n);
}

namespace {

json angle_json(const Angle &a) { return {{"literal", a.literal}, {"radians", a.radians}}; }

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

Angle angle_from(const json &j) {
    if (j.is_string()) return Angle::parse(j.get<std::string>());
    if (j.is_number()) {
        const double v = j.get<double>();
        return {json(v).dump(), v};
    }
    if (j.is_object() && j.contains("literal")) return Angle::parse(j.at("literal").get<std::string>());
    throw InvalidParameter("angle must be a string, number or {literal, radians}: " + j.dump());
}

cplx complex_from(const json &j) {
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    throw InvalidParameter("complex must be [re, im], a number or a string: " + j.dump());
}

int int_from(const json &j, const char *name) {
    if (!j.is_number_integer()) throw InvalidParameter(std::string(name) + " must be an integer");
    return j.get<int>();
}

}  // namespace

json to_json(const RunConfig &c) {
    json tol = json::object();
    for (const auto &[k, v] : c.tolerances) tol[k] = v;
    return {
        {"command", to_string(c.command)},
        {"alpha", angle_json(c.alpha)},
        {"beta", angle_json(c.beta)},
        {"gamma", angle_json(c.gamma)},
        {"theta", angle_json(c.theta)},
        {"init", to_string(c.init)},
        {"m", complex_json(c.m)},
        {"n", complex_json(c.n)},
        {"t", c.t},
        {"phi_min", angle_json(c.phi_min)},
        {"phi_max", angle_json(c.phi_max)},
        {"phi_steps", c.phi_steps},
        {"alpha_split", to_string(c.alpha_split)},
        {"k_samples", c.k_samples},
        {"out", c.out},
        {"format", to_string(c.format)},
        {"engine", to_string(c.engine)},
        {"skip_zeros", c.skip_zeros},
        {"suite", c.suite},
        {"tolerances", tol},
        {"perturb", c.perturb},
    };
}

void apply_json(RunConfig &c, const json &j) {
    if (!j.is_object()) throw InvalidParameter("config must be a JSON object");
    try {
        for (const auto &[key, v] : j.items()) {
            if (key == "command") c.command = parse_command(v.get<std::string>());
            else if (key == "alpha") c.alpha = angle_from(v);
            else if (key == "beta") c.beta = angle_from(v);
            else if (key == "gamma") c.gamma = angle_from(v);
            else if (key == "theta") c.theta = angle_from(v);
            else if (key == "init") c.init = parse_init(v.get<std::string>());
            else if (key == "m") c.m = complex_from(v);
            else if (key == "n") c.n = complex_from(v);
            else if (key == "t") c.t = int_from(v, "t");
            else if (key == "phi_min") c.phi_min = angle_from(v);
            else if (key == "phi_max") c.phi_max = angle_from(v);
            else if (key == "phi_steps") c.phi_steps = int_from(v, "phi_steps");
            else if (key == "alpha_split") c.alpha_split = parse_alpha_split(v.get<std::string>());
            else if (key == "k_samples") c.k_samples = int_from(v, "k_samples");
            else if (key == "out") c.out = v.get<std::string>();
            else if (key == "format") c.format = parse_format(v.get<std::string>());
            else if (key == "engine") c.engine = parse_engine(v.get<std::string>());
            else if (key == "skip_zeros") c.skip_zeros = v.get<bool>();
            else if (key == "suite") c.suite = v.get<std::string>();
            else if (key == "tolerances") {
                c.tolerances.clear();
                for (const auto &[name, tol] : v.items()) c.tolerances[name] = tol.get<double>();
            } else if (key == "perturb") c.perturb = v.get<double>();
            else throw InvalidParameter("unknown config key '" + key + "'");
        }
    } catch (const json::exception &e) {
        throw InvalidParameter(std::string("config type error: ") + e.what());
    }
}

RunConfig config_from_json(const json &j) {
    RunConfig c;
    apply_json(c, j);
    return c;
}

}  // namespace qwalk::cli
