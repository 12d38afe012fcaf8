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

#pragma once

#include <map>
#include <numbers>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qwalk/analysis.hpp"
#include "qwalk/cli/angle.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

enum class Command { Evolve, Sweep, Spectrum, Verify };
enum class EngineKind { Direct, Spectral, Both };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c);
std::string_view to_string(EngineKind e);
std::string_view to_string(OutputFormat f);
Command parse_command(std::string_view s);
EngineKind parse_engine(std::string_view s);
OutputFormat parse_format(std::string_view s);
InitialSpec::Kind parse_init(std::string_view s);

/// Everything one invocation needs. Defaults describe the Hadamard walk from
/// |0L> for 50 steps.
struct RunConfig {
    Command command = Command::Evolve;

    Angle alpha{"pi/2", std::numbers::pi / 2};
    Angle beta{"pi/4", std::numbers::pi / 4};
    Angle gamma{"pi/2", std::numbers::pi / 2};
    Angle theta{"-pi/2", -std::numbers::pi / 2};

    InitialSpec::Kind init = InitialSpec::Kind::PureL;
    cplx m{1.0, 0.0};  ///< custom init only
    cplx n{0.0, 0.0};  ///< custom init only

    int t = 50;

    Angle phi_min{"-pi", -std::numbers::pi};
    Angle phi_max{"pi", std::numbers::pi};
    int phi_steps = 33;
    AlphaSplit alpha_split = AlphaSplit::Half;

    /// 0 picks a default: 2t+2 for spectral evolution, 65 for spectrum dumps.
    int k_samples = 0;

    std::string out;  ///< empty writes to stdout
    OutputFormat format = OutputFormat::Csv;
    EngineKind engine = EngineKind::Direct;
    bool skip_zeros = false;

    std::string suite = "all";
    std::map<std::string, double> tolerances;
    /// Negative-control amplitude kick for verify; 0 disables.
    double perturb = 0.0;
};

CoinParams coin_params(const RunConfig &c);

/// Throws InvalidParameter for a custom init that is not normalized.
InitialSpec initial_spec(const RunConfig &c);

/// Canonical form: fixed key set, angles as {literal, radians}, complex
/// numbers as [re, im].
nlohmann::json to_json(const RunConfig &c);

/// Overwrites the fields present in `j`; unknown keys are rejected. Angles
/// may be given as literal strings, numbers, or {literal, radians} objects
/// (the literal wins).
void apply_json(RunConfig &c, const nlohmann::json &j);

RunConfig config_from_json(const nlohmann::json &j);

}  // namespace qwalk::cli
