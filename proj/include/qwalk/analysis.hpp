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

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// ---------------------------------------------------------------------------
// Distributions and moments
// ---------------------------------------------------------------------------

struct SiteProbability {
    int x = 0;
    double p_left = 0.0;
    double p_right = 0.0;

    double total() const { return p_left + p_right; }
};

/// Per-site chirality-resolved probabilities over [-t, t].
class Distribution {
  public:
    Distribution(int steps, std::vector<SiteProbability> entries);

    int steps() const { return steps_; }
    std::span<const SiteProbability> entries() const { return entries_; }

    /// Zero outside [-t, t].
    SiteProbability at(int x) const;
    double total_probability() const;

  private:
    int steps_;
    std::vector<SiteProbability> entries_;
};

Distribution distribution(const WalkState &state);

double mean_position(const Distribution &d);

/// Largest |p_L| or |p_R| difference over the union of both supports.
double max_probability_diff(const Distribution &a, const Distribution &b);

// ---------------------------------------------------------------------------
// Evolution engines
// ---------------------------------------------------------------------------

using Engine = std::function<WalkState(const InitialSpec &, const CoinParams &, int)>;

/// Position-space stepping (evolve).
Engine direct_engine();

/// Momentum-space propagation with the minimal exact sample count 2t + 2.
Engine spectral_engine();

/// Negative control: runs `inner`, then nudges the rightmost amplitude by a
/// parameter-dependent amount eps (1 + alpha^2 + gamma^2 + theta^2) and
/// renormalizes. Every checker must reject its output for eps >> tolerance.
Engine perturbed_engine(Engine inner, double eps);

// ---------------------------------------------------------------------------
// Splitting phi = alpha + gamma
// ---------------------------------------------------------------------------

enum class AlphaSplit {
    Zero,  ///< alpha = 0, gamma = phi
    Half,  ///< alpha = gamma = phi / 2
    Full,  ///< alpha = phi, gamma = 0
};

std::string_view to_string(AlphaSplit split);

/// Throws InvalidParameter for anything but "zero", "half", "full".
AlphaSplit parse_alpha_split(std::string_view text);

/// SU(2) coin angles realizing phi under the given split.
CoinParams split_params(double beta, double phi, AlphaSplit split);

// ---------------------------------------------------------------------------
// Interference profile G^L, G^R
// ---------------------------------------------------------------------------

/// Chirality-resolved probabilities from m|0L> + n|0R> decompose as
///
///     P^j(x) = |m|^2 P^j_{0L}(x) + |n|^2 P^j_{0R}(x)
///              - (e^{-i phi} m* n + e^{i phi} m n*) G^j(beta, x, t)
///
/// for j in {L, R}. The profile stores G^L, G^R and the two pure-state
/// baselines, all indexed by x + t.
struct GProfile {
    double beta = 0.0;
    int t = 0;
    std::vector<double> g_left;
    std::vector<double> g_right;
    std::vector<double> base_l_left;   ///< P^L from |0L>
    std::vector<double> base_l_right;  ///< P^R from |0L>
    std::vector<double> base_r_left;   ///< P^L from |0R>
    std::vector<double> base_r_right;  ///< P^R from |0R>
    /// -sum_x x (G^L + G^R); the average position of the symmetric start is
    /// g_total * sin(phi).
    double g_total = 0.0;

    /// Distribution implied by the decomposition for m|0L> + n|0R> at phi.
    Distribution predict(cplx m, cplx n, double phi) const;
};

/// Solves for G^L, G^R from symmetric-start runs at phi = +pi/2 and -pi/2,
/// where the cross coefficient equals sin(phi) = +-1.
GProfile extract_G(double beta, int t, const Engine &engine,
                   AlphaSplit split = AlphaSplit::Half);

// ---------------------------------------------------------------------------
// Average-position sweeps
// ---------------------------------------------------------------------------

struct SweepSample {
    double phi = 0.0;
    double mean_x = 0.0;
};

struct SinusoidFit {
    double a = 0.0;  ///< sin coefficient
    double b = 0.0;  ///< cos coefficient
    double c = 0.0;  ///< constant
    double residual_rms = 0.0;
};

/// Least squares of mean_x against {sin phi, cos phi, 1}. Needs at least
/// three samples with distinct phases for a unique solution.
SinusoidFit fit_sinusoid(std::span<const SweepSample> samples);

struct SweepResult {
    double beta = 0.0;
    int t = 0;
    std::vector<SweepSample> samples;
    double fit_a = 0.0;
    double fit_b = 0.0;
    double fit_c = 0.0;
    double residual_rms = 0.0;
};

/// <x> of the symmetric start for every phi, run in parallel, then fitted.
SweepResult sweep_mean_position(double beta, int t, std::span<const double> phis,
                                AlphaSplit split = AlphaSplit::Half,
                                const Engine &engine = direct_engine());

/// n evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

// ---------------------------------------------------------------------------
// Theorem checks
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;
};

struct TheoremReport {
    std::vector<CheckResult> checks;

    bool overall() const;
};

namespace tolerance {
inline constexpr double kAmplitude = 1e-12;
inline constexpr double kProbability = 1e-10;
inline constexpr double kDerived = 1e-8;
inline constexpr double kSplit = 1e-9;
inline constexpr double kEngines = 1e-9;
}  // namespace tolerance

/// Distributions are the same for every global phase theta.
CheckResult check_lemma1(const CoinParams &params, std::span<const double> thetas,
                         const InitialSpec &spec, int t, const Engine &engine = direct_engine(),
                         double tol = tolerance::kAmplitude);

/// Distributions from |0L> or |0R> do not depend on alpha or gamma. Reports
/// the largest per-site spread across the grid alphas x gammas. Throws
/// InvalidSpec for any other initial state.
CheckResult check_theorem1(double beta, std::span<const double> alphas,
                           std::span<const double> gammas, const InitialSpec &spec, int t,
                           const Engine &engine = direct_engine(),
                           double tol = tolerance::kProbability);

/// Reality conditions linking the |0L> and mirrored |0R> amplitudes:
///     Psi^R_{0L}(x) + Psi^L_{0R}(-x) imaginary, difference real,
///     Psi^L_{0L}(x) + Psi^R_{0R}(-x) real, difference imaginary.
/// theta is dropped.
CheckResult check_theorem2(const CoinParams &params, int t, const Engine &engine = direct_engine(),
                           double tol = tolerance::kAmplitude);

/// P^R_{0L}(x) = P^L_{0R}(-x) and P^L_{0L}(x) = P^R_{0R}(-x).
CheckResult check_corollary2(const CoinParams &params, int t,
                             const Engine &engine = direct_engine(),
                             double tol = tolerance::kAmplitude);
CheckResult check_corollary2(double beta, int t);

/// One point of the decomposition test: initial state m|0L> + n|0R> with
/// alpha + gamma = phi, alpha = alpha_fraction * phi.
struct MixedStart {
    cplx m;
    cplx n;
    double phi;
    double alpha_fraction = 0.5;
};

/// The fixed five-point set used by the verify suite.
std::vector<MixedStart> default_mixed_starts();

/// Predictions from `profile` against direct runs of `engine`.
CheckResult check_theorem3(const GProfile &profile, std::span<const MixedStart> starts,
                           const Engine &engine = direct_engine(),
                           double tol = tolerance::kProbability);

/// (i) <x> agrees across alpha splits of each phi; (ii) <x> / sin(phi) is the
/// same for every phi with |sin phi| > 0.1. Returns one entry per part.
std::vector<CheckResult> check_theorem4(double beta, int t, std::span<const double> phis,
                                        std::span<const AlphaSplit> splits,
                                        const Engine &engine = direct_engine(),
                                        double split_tol = tolerance::kSplit,
                                        double ratio_tol = tolerance::kDerived);

/// Largest amplitude difference between two engines over a set of runs.
CheckResult check_engines(std::span<const CoinParams> coins, std::span<const InitialSpec> specs,
                          int t, const Engine &a, const Engine &b,
                          double tol = tolerance::kEngines);

}  // namespace qwalk
