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

#include "qwalk/analysis.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

const std::vector<double> kGrid = {0.0, pi / 6, pi / 3, pi / 2};

Distribution dist_of(std::vector<SiteProbability> e) {
    const int t = static_cast<int>(e.size() / 2);
    return Distribution(t, std::move(e));
}

}  // namespace

// ---------------------------------------------------------------------------
// distribution / mean_position

TEST(distribution, one_hadamard_step) {
    const Distribution d = distribution(evolve(InitialSpec::pure_l(), hadamard_params(), 1));
    EXPECT_NEAR(d.at(-1).total(), 0.5, 1e-15);
    EXPECT_NEAR(d.at(1).total(), 0.5, 1e-15);
    EXPECT_EQ(d.at(0).total(), 0.0);
}

TEST(distribution, symmetric_start_at_origin) {
    const Distribution d = distribution(initial_state(InitialSpec::symmetric()));
    EXPECT_NEAR(d.at(0).total(), 1.0, 1e-15);
    EXPECT_NEAR(d.at(0).p_left, 0.5, 1e-15);
}

TEST(distribution, two_hadamard_steps_path_sum) {
    const auto paths = oracle::path_sum(oracle::coin_from_angles(pi / 2, pi / 4, pi / 2, -pi / 2), 1.0, 0.0, 2);
    const Distribution d = distribution(evolve(InitialSpec::pure_l(), hadamard_params(), 2));
    for (int x : {-2, 0, 2}) {
        double p = 0.0;
        for (int c : {0, 1})
            if (paths.count({x, c})) p += std::norm(paths.at({x, c}));
        EXPECT_NEAR(d.at(x).total(), p, 1e-15);
    }
    EXPECT_NEAR(d.at(-2).total(), 0.25, 1e-12);
    EXPECT_NEAR(d.at(0).total(), 0.5, 1e-12);
    EXPECT_NEAR(d.at(2).total(), 0.25, 1e-12);
}

TEST(mean_position, simple_cases) {
    EXPECT_EQ(mean_position(dist_of({{-1, 0.5, 0.0}, {0, 0.0, 0.0}, {1, 0.0, 0.5}})), 0.0);
    EXPECT_EQ(mean_position(distribution(evolve(InitialSpec::pure_l(), {}, 5))), -5.0);
}

TEST(mean_position, hadamard_drift_at_t100) {
    const double from_l = mean_position(distribution(evolve(InitialSpec::pure_l(), hadamard_params(), 100)));
    const double from_r = mean_position(distribution(evolve(InitialSpec::pure_r(), hadamard_params(), 100)));
    EXPECT_GT(std::abs(from_l), 28.0);
    EXPECT_LT(std::abs(from_l), 30.0);
    EXPECT_LT(from_l, 0.0);
    EXPECT_NEAR(from_l, -from_r, 1e-10);
    const double spectral =
        mean_position(distribution(propagate_fourier(InitialSpec::pure_l(), hadamard_params(), 100, 202)));
    EXPECT_NEAR(from_l, spectral, 1e-9);
}

TEST(distribution_properties, sums_to_one_up_to_t200) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-pi, pi);
    for (int t = 0; t <= 200; t += 8) {
        const Distribution d = distribution(evolve(InitialSpec::symmetric(), {u(rng), u(rng), u(rng), u(rng)}, t));
        ASSERT_NEAR(d.total_probability(), 1.0, 1e-10) << t;
        for (const auto &e : d.entries()) {
            ASSERT_GE(e.p_left, 0.0);
            ASSERT_LE(e.total(), 1.0 + 1e-12);
        }
    }
}

// ---------------------------------------------------------------------------
// extract_G

TEST(extract_G, diagonal_coin_has_no_interference) {
    const GProfile g = extract_G(0.0, 30, direct_engine());
    for (double v : g.g_left) EXPECT_NEAR(v, 0.0, 1e-15);
    for (double v : g.g_right) EXPECT_NEAR(v, 0.0, 1e-15);
    EXPECT_NEAR(g.g_total, 0.0, 1e-12);
}

TEST(extract_G, swap_coin_has_zero_drift) {
    // Oracle: path enumeration of <x> for the symmetric start with the beta = pi/2
    // coin at phi = +-pi/2, small t.
    for (int t = 1; t <= 8; ++t) {
        for (double phi : {pi / 2, -pi / 2}) {
            const auto paths = oracle::path_sum(oracle::coin_from_angles(phi / 2, pi / 2, phi / 2, 0.0),
                                                1.0 / std::sqrt(2.0), {0.0, 1.0 / std::sqrt(2.0)}, t);
            double mean = 0.0;
            for (const auto &[key, amp] : paths) mean += key.first * std::norm(amp);
            ASSERT_NEAR(mean, 0.0, 1e-14);
        }
    }
    for (int t : {1, 2, 7, 40}) EXPECT_NEAR(extract_G(pi / 2, t, direct_engine()).g_total, 0.0, 1e-12) << t;
}

TEST(extract_G, predicts_third_phase) {
    const GProfile g = extract_G(pi / 6, 100, direct_engine());
    const double s = 1.0 / std::sqrt(2.0);
    const Distribution direct =
        distribution(evolve(InitialSpec::symmetric(), split_params(pi / 6, pi / 5, AlphaSplit::Half), 100));
    EXPECT_LE(max_probability_diff(direct, g.predict(s, cplx(0, s), pi / 5)), 1e-10);
}

TEST(extract_G, total_matches_definition) {
    const GProfile g = extract_G(pi / 5, 40, direct_engine());
    double moment = 0.0;
    for (int x = -40; x <= 40; ++x) moment += x * (g.g_left[x + 40] + g.g_right[x + 40]);
    EXPECT_NEAR(g.g_total, -moment, 1e-10);
}

TEST(extract_G, independent_of_alpha_split) {
    const GProfile half = extract_G(pi / 6, 60, direct_engine(), AlphaSplit::Half);
    const GProfile zero = extract_G(pi / 6, 60, direct_engine(), AlphaSplit::Zero);
    const GProfile full = extract_G(pi / 6, 60, direct_engine(), AlphaSplit::Full);
    for (std::size_t i = 0; i < half.g_left.size(); ++i) {
        EXPECT_NEAR(half.g_left[i], zero.g_left[i], 1e-9);
        EXPECT_NEAR(half.g_right[i], full.g_right[i], 1e-9);
    }
}

TEST(extract_G, zero_steps) {
    const GProfile g = extract_G(pi / 6, 0, direct_engine());
    EXPECT_EQ(g.g_total, 0.0);
    ASSERT_EQ(g.g_left.size(), 1u);
    EXPECT_EQ(g.g_left[0], 0.0);
}

TEST(theorem3_properties, random_mixed_starts_reconstruct) {
    std::mt19937_64 rng(32);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> u(-pi, pi);
    const GProfile g = extract_G(0.8, 50, direct_engine());
    for (int trial = 0; trial < 20; ++trial) {
        cplx m(gauss(rng), gauss(rng)), n(gauss(rng), gauss(rng));
        const double norm = std::sqrt(std::norm(m) + std::norm(n));
        m /= norm;
        n /= norm;
        const double phi = u(rng);
        const double alpha = u(rng);
        const Distribution direct = distribution(evolve(InitialSpec::custom(m, n), {alpha, 0.8, phi - alpha, 0.0}, 50));
        ASSERT_LE(max_probability_diff(direct, g.predict(m, n, phi)), 1e-10) << trial;
    }
}

// ---------------------------------------------------------------------------
// sweeps and fits

TEST(fit_sinusoid, exact_sine) {
    std::vector<SweepSample> samples;
    for (double phi : linspace(-pi, pi, 17)) samples.push_back({phi, std::sin(phi)});
    const SinusoidFit f = fit_sinusoid(samples);
    EXPECT_NEAR(f.a, 1.0, 1e-14);
    EXPECT_NEAR(f.b, 0.0, 1e-14);
    EXPECT_NEAR(f.c, 0.0, 1e-14);
    EXPECT_NEAR(f.residual_rms, 0.0, 1e-14);
}

TEST(fit_sinusoid, recovers_all_coefficients) {
    std::vector<SweepSample> samples;
    for (double phi : linspace(-2.0, 2.5, 11)) samples.push_back({phi, 3 * std::sin(phi) - 0.5 * std::cos(phi) + 0.25});
    const SinusoidFit f = fit_sinusoid(samples);
    EXPECT_NEAR(f.a, 3.0, 1e-12);
    EXPECT_NEAR(f.b, -0.5, 1e-12);
    EXPECT_NEAR(f.c, 0.25, 1e-12);
    EXPECT_THROW(fit_sinusoid(std::span<const SweepSample>(samples).first(2)), InvalidParameter);
}

TEST(sweep, zero_and_pi_have_no_drift) {
    const std::vector<double> phis = {0.0, pi};
    for (double beta : {0.2, pi / 6, 1.3}) {
        const SweepResult r = sweep_mean_position(beta, 40, phis);
        EXPECT_NEAR(r.samples[0].mean_x, 0.0, 1e-10);
        EXPECT_NEAR(r.samples[1].mean_x, 0.0, 1e-10);
    }
    EXPECT_THROW(sweep_mean_position(0.1, 3, {}), InvalidParameter);
}

TEST(sweep, beta_pi6_t100_is_pure_sine) {
    std::vector<double> phis;
    for (int i = 0; i < 32; ++i) phis.push_back(-pi + 2 * pi * i / 32);
    const SweepResult r = sweep_mean_position(pi / 6, 100, phis);
    double max_abs = 0.0;
    for (const auto &s : r.samples) max_abs = std::max(max_abs, std::abs(s.mean_x));
    EXPECT_GT(r.fit_a, 0.0);
    EXPECT_LE(r.residual_rms, 1e-8 * max_abs);
    EXPECT_LE(std::abs(r.fit_b), 1e-8 * r.fit_a);
    EXPECT_LE(std::abs(r.fit_c), 1e-8 * r.fit_a);
}

TEST(sweep_properties, sinusoid_law_and_G_agree) {
    const std::vector<double> phis = linspace(-pi, pi, 25);
    for (double beta : {pi / 12, pi / 6, pi / 4, pi / 3}) {
        for (int t : {20, 100}) {
            const SweepResult r = sweep_mean_position(beta, t, phis);
            ASSERT_LE(std::abs(r.fit_b), 1e-8 * std::abs(r.fit_a)) << beta << " " << t;
            ASSERT_LE(std::abs(r.fit_c), 1e-8 * std::abs(r.fit_a)) << beta << " " << t;
            const GProfile g = extract_G(beta, t, direct_engine());
            ASSERT_NEAR(g.g_total, r.fit_a, 1e-8 * std::abs(r.fit_a)) << beta << " " << t;
        }
    }
}

TEST(sweep_properties, drift_nonzero_away_from_multiples_of_pi) {
    const std::vector<double> phis = {pi / 4, pi / 2, 3 * pi / 4};
    const SweepResult r = sweep_mean_position(pi / 6, 100, phis);
    for (const auto &s : r.samples) EXPECT_GT(std::abs(s.mean_x), 0.1) << s.phi;
}

TEST(sweep, spectral_engine_agrees) {
    const std::vector<double> phis = linspace(-pi, pi, 9);
    const SweepResult a = sweep_mean_position(pi / 6, 30, phis, AlphaSplit::Zero);
    const SweepResult b = sweep_mean_position(pi / 6, 30, phis, AlphaSplit::Full, spectral_engine());
    for (std::size_t i = 0; i < phis.size(); ++i) EXPECT_NEAR(a.samples[i].mean_x, b.samples[i].mean_x, 1e-9);
}

TEST(alpha_split, parse_and_params) {
    EXPECT_EQ(parse_alpha_split("zero"), AlphaSplit::Zero);
    EXPECT_EQ(parse_alpha_split("half"), AlphaSplit::Half);
    EXPECT_EQ(parse_alpha_split("full"), AlphaSplit::Full);
    EXPECT_THROW(parse_alpha_split("third"), InvalidParameter);
    for (AlphaSplit s : {AlphaSplit::Zero, AlphaSplit::Half, AlphaSplit::Full}) {
        EXPECT_DOUBLE_EQ(split_params(0.4, 1.3, s).phi(), 1.3);
        EXPECT_EQ(split_params(0.4, 1.3, s).beta, 0.4);
    }
}

// ---------------------------------------------------------------------------
// checkers

TEST(check_lemma1, hadamard_angles) {
    const std::vector<double> thetas = {-pi / 2, 0.0, 1.3};
    EXPECT_TRUE(check_lemma1(hadamard_params(), thetas, InitialSpec::pure_l(), 20).passed);
    const std::vector<double> one = {0.4};
    const CheckResult single = check_lemma1(hadamard_params(), one, InitialSpec::pure_l(), 20);
    EXPECT_TRUE(single.passed);
    EXPECT_EQ(single.max_violation, 0.0);
}

TEST(check_lemma1, perturbed_engine_fails) {
    const std::vector<double> thetas = {-pi / 2, 0.0, 1.3};
    const CheckResult r = check_lemma1(hadamard_params(), thetas, InitialSpec::pure_l(), 20,
                                       perturbed_engine(direct_engine(), 1e-6));
    EXPECT_FALSE(r.passed);
    EXPECT_GT(r.max_violation, r.tolerance);
}

TEST(check_theorem1, grid_pass_and_scope) {
    EXPECT_TRUE(check_theorem1(pi / 6, kGrid, kGrid, InitialSpec::pure_l(), 30).passed);
    EXPECT_TRUE(check_theorem1(pi / 6, kGrid, kGrid, InitialSpec::pure_r(), 30).passed);
    const std::vector<double> one = {0.2};
    EXPECT_EQ(check_theorem1(pi / 6, one, one, InitialSpec::pure_l(), 30).max_violation, 0.0);
    EXPECT_THROW(check_theorem1(pi / 6, kGrid, kGrid, InitialSpec::symmetric(), 30), InvalidSpec);
    EXPECT_THROW(check_theorem1(pi / 6, kGrid, kGrid, InitialSpec::custom(0.6, 0.8), 30), InvalidSpec);
}

TEST(check_theorem1, symmetric_start_does_depend_on_phi) {
    // The symmetric start is outside the theorem; its distribution moves with phi.
    const Distribution a = distribution(evolve(InitialSpec::symmetric(), {0.0, pi / 6, 0.0, 0.0}, 30));
    const Distribution b = distribution(evolve(InitialSpec::symmetric(), {pi / 3, pi / 6, pi / 3, 0.0}, 30));
    EXPECT_GT(max_probability_diff(a, b), 1e-3);
}

TEST(check_theorem1, perturbed_engine_fails) {
    EXPECT_FALSE(check_theorem1(pi / 6, kGrid, kGrid, InitialSpec::pure_l(), 30,
                                perturbed_engine(direct_engine(), 1e-6))
                     .passed);
}

TEST(check_theorem2, one_step_by_hand) {
    const CoinParams p{0.7, 0.9, -0.4, 0.0};
    const WalkState from_l = evolve(InitialSpec::pure_l(), p, 1);
    const WalkState from_r = evolve(InitialSpec::pure_r(), p, 1);
    EXPECT_NEAR(std::abs(from_l.at(1).right - std::polar(std::sin(0.9), -0.4)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(from_r.at(-1).left + std::polar(std::sin(0.9), 0.4)), 0.0, 1e-15);
    const cplx sum = from_l.at(1).right + from_r.at(-1).left;
    EXPECT_NEAR(sum.real(), 0.0, 1e-15);
    EXPECT_NEAR(sum.imag(), -2 * std::sin(0.4) * std::sin(0.9), 1e-15);
    EXPECT_TRUE(check_theorem2(p, 1).passed);
}

TEST(check_theorem2, longer_walks) {
    EXPECT_TRUE(check_theorem2({0.3, pi / 6, -1.1, 0.0}, 40).passed);
    EXPECT_TRUE(check_theorem2(hadamard_params(), 25).passed);
}

TEST(check_theorem2, perturbed_engine_fails) {
    EXPECT_FALSE(check_theorem2({0.3, pi / 6, -1.1, 0.0}, 40, perturbed_engine(direct_engine(), 1e-6)).passed);
}

TEST(check_corollary2, cases) {
    EXPECT_TRUE(check_corollary2(pi / 6, 50).passed);
    const CheckResult zero = check_corollary2(pi / 6, 0);
    EXPECT_TRUE(zero.passed);
    EXPECT_EQ(zero.max_violation, 0.0);
    EXPECT_TRUE(check_corollary2(pi / 4, 33).passed);
    EXPECT_TRUE(check_corollary2({1.0, 0.4, -2.0, 0.5}, 17).passed);
}

TEST(check_corollary2, perturbed_engine_fails) {
    EXPECT_FALSE(check_corollary2({0.0, pi / 6, 0.0, 0.0}, 30, perturbed_engine(direct_engine(), 1e-4)).passed);
}

TEST(check_theorem3, default_starts) {
    const auto starts = default_mixed_starts();
    EXPECT_EQ(starts.size(), 5u);
    const GProfile g = extract_G(pi / 6, 50, direct_engine());
    EXPECT_TRUE(check_theorem3(g, starts).passed);
    EXPECT_FALSE(check_theorem3(g, starts, perturbed_engine(direct_engine(), 1e-6)).passed);
}

TEST(check_theorem4, beta_pi_6_t100_setting) {
    const std::vector<double> phis = {pi / 6, pi / 2, 5 * pi / 6};
    const std::vector<AlphaSplit> splits = {AlphaSplit::Zero, AlphaSplit::Half, AlphaSplit::Full};
    const auto r = check_theorem4(pi / 6, 100, phis, splits);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_TRUE(r[0].passed);
    EXPECT_TRUE(r[1].passed);
}

TEST(check_theorem4, phi_pi_only) {
    const std::vector<double> phis = {pi};
    const std::vector<AlphaSplit> splits = {AlphaSplit::Zero, AlphaSplit::Half, AlphaSplit::Full};
    const auto r = check_theorem4(pi / 6, 50, phis, splits);
    EXPECT_TRUE(r[0].passed);
    EXPECT_TRUE(r[1].passed);
    EXPECT_EQ(r[1].max_violation, 0.0);
    EXPECT_NE(r[1].note.find("skipped"), std::string::npos);
}

TEST(check_theorem4, other_beta) {
    const std::vector<double> phis = {-2.0, 0.5, pi / 2, 2.5};
    const std::vector<AlphaSplit> splits = {AlphaSplit::Zero, AlphaSplit::Full};
    for (const auto &c : check_theorem4(pi / 3, 60, phis, splits)) EXPECT_TRUE(c.passed) << c.name;
}

TEST(check_theorem4, perturbed_engine_fails) {
    const std::vector<double> phis = {pi / 6, pi / 2, 5 * pi / 6};
    const std::vector<AlphaSplit> splits = {AlphaSplit::Zero, AlphaSplit::Full};
    const auto r = check_theorem4(pi / 6, 40, phis, splits, perturbed_engine(direct_engine(), 1e-4));
    EXPECT_FALSE(r[0].passed && r[1].passed);
}

TEST(check_engines, direct_vs_spectral) {
    const std::vector<CoinParams> coins = {hadamard_params(), {0.3, 1.0, -0.2, 0.9}};
    const std::vector<InitialSpec> specs = {InitialSpec::pure_l(), InitialSpec::symmetric()};
    EXPECT_TRUE(check_engines(coins, specs, 20, direct_engine(), spectral_engine()).passed);
    EXPECT_FALSE(check_engines(coins, specs, 20, direct_engine(),
                               perturbed_engine(spectral_engine(), 1e-6))
                     .passed);
}

TEST(theorem_report, overall_is_conjunction) {
    TheoremReport r;
    EXPECT_TRUE(r.overall());
    r.checks.push_back({"a", 0.0, 1.0, true, ""});
    EXPECT_TRUE(r.overall());
    r.checks.push_back({"b", 2.0, 1.0, false, ""});
    EXPECT_FALSE(r.overall());
}
