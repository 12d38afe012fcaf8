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

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/cli/config.hpp"
#include "qwalk/cli/csv.hpp"

namespace qwalk::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitIo = 2,
    kExitVerifyFailed = 3,
};

/// Distribution over x = -t..t: columns x, p_L, p_R, p_total.
Table run_evolve(const RunConfig &config);

/// <x> against phi with the sinusoid fit in the metadata.
Table run_sweep(const RunConfig &config);

/// Dispersion and eigenvectors of M_k on k_samples points spanning [-pi, pi].
Table run_spectrum(const RunConfig &config);

/// Suites: all, lemma1, thm1, thm2, cor2, thm3, thm4.
TheoremReport run_verify(const RunConfig &config);

nlohmann::json report_to_json(const TheoremReport &report);

/// Full command-line entry point; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qwalk::cli
