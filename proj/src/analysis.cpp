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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

using std::numbers::pi;

namespace {

std::size_t index_of(int x, int t) { return static_cast<std::size_t>(x + t); }

CheckResult make_check(std::string name, double violation, double tol, std::string note = {}) {
    const bool ok = std::isfinite(violation) && violation <= tol;
    return {std::move(name), violation, tol, ok, std::move(note)};
}

}  // namespace

// ---------------------------------------------------------------------------

Distribution::Distribution(int steps, std::vector<SiteProbability> entries)
    : steps_(steps), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(2 * steps_ + 1)) {
        throw InvalidParameter("distribution must cover [-t, t]");
    }
}

SiteProbability Distribution::at(int x) const {
    if (x < -steps_ || x > steps_) return {x, 0.0, 0.0};
    return entries_[index_of(x, steps_)];
}

double Distribution::total_probability() const {
    double s = 0.0;
    for (const auto &e : entries_) s += e.total();
    return s;
}

Distribution distribution(const WalkState &state) {
    std::vector<SiteProbability> entries;
    entries.reserve(state.amplitudes().size());
    int x = state.min_site();
    for (const Spinor &a : state.amplitudes()) {
        entries.push_back({x++, std::norm(a.left), std::norm(a.right)});
    }
    return Distribution(state.steps(), std::move(entries));
}

double mean_position(const Distribution &d) {
    double s = 0.0;
    for (const auto &e : d.entries()) s += e.x * e.total();
    return s;
}

double max_probability_diff(const Distribution &a, const Distribution &b) {
    const int reach = std::max(a.steps(), b.steps());
    double worst = 0.0;
    for (int x = -reach; x <= reach; ++x) {
        const auto u = a.at(x), v = b.at(x);
        worst = std::max({worst, std::abs(u.p_left - v.p_left), std::abs(u.p_right - v.p_right)});
    }
    return worst;
}

// ---------------------------------------------------------------------------

Engine direct_engine() { return [](const InitialSpec &s, const CoinParams &p, int t) { return evolve(s, p, t); }; }

Engine spectral_engine() {
    return [](const InitialSpec &s, const CoinParams &p, int t) {
        return propagate_fourier(s, p, t, 2 * t + 2);
    };
}

Engine perturbed_engine(Engine inner, double eps) {
    return [inner = std::move(inner), eps](const InitialSpec &s, const CoinParams &p, int t) {
        const WalkState clean = inner(s, p, t);
        std::vector<Spinor> amps(clean.amplitudes().begin(), clean.amplitudes().end());
        const double kick = eps * (1.0 + p.alpha * p.alpha + p.gamma * p.gamma + p.theta * p.theta);
        amps.back().right += kick;
        const double scale = 1.0 / std::sqrt(WalkState(t, amps).norm_squared());
        for (auto &a : amps) {
            a.left *= scale;
            a.right *= scale;
        }
        return WalkState(t, std::move(amps));
    };
}

// ---------------------------------------------------------------------------

std::string_view to_string(AlphaSplit split) {
    switch (split) {
    case AlphaSplit::Zero: return "zero";
    case AlphaSplit::Half: return "half";
    case AlphaSplit::Full: return "full";
    }
    return "?";
}

AlphaSplit parse_alpha_split(std::string_view text) {
    if (text == "zero") return AlphaSplit::Zero;
    if (text == "half") return AlphaSplit::Half;
    if (text == "full") return AlphaSplit::Full;
    throw InvalidParameter("alpha split must be zero, half or full, got '" + std::string(text) + "'");
}

CoinParams split_params(double beta, double phi, AlphaSplit split) {
    switch (split) {
    case AlphaSplit::Zero: return {0.0, beta, phi, 0.0};
    case AlphaSplit::Half: return {phi / 2, beta, phi / 2, 0.0};
    case AlphaSplit::Full: return {phi, beta, 0.0, 0.0};
    }
    return {};
}

// ---------------------------------------------------------------------------

Distribution GProfile::predict(cplx m, cplx n, double phi) const {
    const double wm = std::norm(m), wn = std::norm(n);
    // e^{-i phi} m* n + c.c.
    const double cross = 2.0 * std::real(std::polar(1.0, -phi) * std::conj(m) * n);
    std::vector<SiteProbability> entries;
    entries.reserve(g_left.size());
    for (std::size_t i = 0; i < g_left.size(); ++i) {
        entries.push_back({static_cast<int>(i) - t,
                           wm * base_l_left[i] + wn * base_r_left[i] - cross * g_left[i],
                           wm * base_l_right[i] + wn * base_r_right[i] - cross * g_right[i]});
    }
    return Distribution(t, std::move(entries));
}

GProfile extract_G(double beta, int t, const Engine &engine, AlphaSplit split) {
    if (t < 0) throw InvalidParameter("step count must be nonnegative");
    const CoinParams up = split_params(beta, pi / 2, split);
    const CoinParams down = split_params(beta, -pi / 2, split);

    // Four independent runs: symmetric at +-pi/2, then both pure starts.
    const auto runs = parallel_map<Distribution>(4, [&](std::size_t i) {
        switch (i) {
        case 0: return distribution(engine(InitialSpec::symmetric(), up, t));
        case 1: return distribution(engine(InitialSpec::symmetric(), down, t));
        case 2: return distribution(engine(InitialSpec::pure_l(), up, t));
        default: return distribution(engine(InitialSpec::pure_r(), up, t));
        }
    });

    GProfile g;
    g.beta = beta;
    g.t = t;
    const auto sites = static_cast<std::size_t>(2 * t + 1);
    g.g_left.resize(sites);
    g.g_right.resize(sites);
    g.base_l_left.resize(sites);
    g.base_l_right.resize(sites);
    g.base_r_left.resize(sites);
    g.base_r_right.resize(sites);
    double moment = 0.0;
    for (std::size_t i = 0; i < sites; ++i) {
        const auto pu = runs[0].entries()[i], pd = runs[1].entries()[i];
        g.g_left[i] = 0.5 * (pd.p_left - pu.p_left);
        g.g_right[i] = 0.5 * (pd.p_right - pu.p_right);
        g.base_l_left[i] = runs[2].entries()[i].p_left;
        g.base_l_right[i] = runs[2].entries()[i].p_right;
        g.base_r_left[i] = runs[3].entries()[i].p_left;
        g.base_r_right[i] = runs[3].entries()[i].p_right;
        moment += (static_cast<double>(i) - t) * (g.g_left[i] + g.g_right[i]);
    }
    g.g_total = -moment;
    return g;
}

// ---------------------------------------------------------------------------

SinusoidFit fit_sinusoid(std::span<const SweepSample> samples) {
    if (samples.size() < 3) throw InvalidParameter("sinusoid fit needs at least three samples");
    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double phi = samples[static_cast<std::size_t>(i)].phi;
        design(i, 0) = std::sin(phi);
        design(i, 1) = std::cos(phi);
        design(i, 2) = 1.0;
        y(i) = samples[static_cast<std::size_t>(i)].mean_x;
    }
    const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(y);
    const Eigen::VectorXd resid = design * coef - y;
    return {coef(0), coef(1), coef(2), std::sqrt(resid.squaredNorm() / static_cast<double>(n))};
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw InvalidParameter("linspace needs at least one point");
    if (n == 1) return {lo};
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    out.back() = hi;
    return out;
}

SweepResult sweep_mean_position(double beta, int t, std::span<const double> phis, AlphaSplit split,
                                const Engine &engine) {
    if (phis.empty()) throw InvalidParameter("sweep needs at least one phi");
    SweepResult r;
    r.beta = beta;
    r.t = t;
    r.samples = parallel_map<SweepSample>(phis.size(), [&](std::size_t i) {
        const double phi = phis[i];
        const WalkState s = engine(InitialSpec::symmetric(), split_params(beta, phi, split), t);
        return SweepSample{phi, mean_position(distribution(s))};
    });
    if (r.samples.size() >= 3) {
        const SinusoidFit fit = fit_sinusoid(r.samples);
        r.fit_a = fit.a;
        r.fit_b = fit.b;
        r.fit_c = fit.c;
        r.residual_rms = fit.residual_rms;
    }
    return r;
}

// ---------------------------------------------------------------------------

bool TheoremReport::overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

CheckResult check_lemma1(const CoinParams &params, std::span<const double> thetas,
                         const InitialSpec &spec, int t, const Engine &engine, double tol) {
    if (thetas.empty()) return make_check("lemma1", 0.0, tol);
    const auto dists = parallel_map<Distribution>(thetas.size(), [&](std::size_t i) {
        CoinParams p = params;
        p.theta = thetas[i];
        return distribution(engine(spec, p, t));
    });
    double worst = 0.0;
    for (std::size_t i = 1; i < dists.size(); ++i) {
        worst = std::max(worst, max_probability_diff(dists[0], dists[i]));
    }
    return make_check("lemma1", worst, tol);
}

CheckResult check_theorem1(double beta, std::span<const double> alphas,
                           std::span<const double> gammas, const InitialSpec &spec, int t,
                           const Engine &engine, double tol) {
    if (spec.kind() != InitialSpec::Kind::PureL && spec.kind() != InitialSpec::Kind::PureR) {
        throw InvalidSpec("alpha/gamma independence holds only for |0L> or |0R> starts, got " +
                          std::string(to_string(spec.kind())));
    }
    const std::size_t count = alphas.size() * gammas.size();
    if (count == 0) return make_check("thm1", 0.0, tol);
    const auto dists = parallel_map<Distribution>(count, [&](std::size_t i) {
        const CoinParams p{alphas[i / gammas.size()], beta, gammas[i % gammas.size()], 0.0};
        return distribution(engine(spec, p, t));
    });
    // Per-site max minus min over the grid is the largest pairwise difference.
    double worst = 0.0;
    for (std::size_t site = 0; site < dists[0].entries().size(); ++site) {
        double lo_l = std::numeric_limits<double>::infinity(), hi_l = -lo_l;
        double lo_r = lo_l, hi_r = hi_l;
        for (const auto &d : dists) {
            const auto e = d.entries()[site];
            lo_l = std::min(lo_l, e.p_left);
            hi_l = std::max(hi_l, e.p_left);
            lo_r = std::min(lo_r, e.p_right);
            hi_r = std::max(hi_r, e.p_right);
        }
        worst = std::max({worst, hi_l - lo_l, hi_r - lo_r});
    }
    return make_check("thm1", worst, tol);
}

CheckResult check_theorem2(const CoinParams &params, int t, const Engine &engine, double tol) {
    CoinParams p = params;
    p.theta = 0.0;
    const WalkState from_l = engine(InitialSpec::pure_l(), p, t);
    const WalkState from_r = engine(InitialSpec::pure_r(), p, t);
    double worst = 0.0;
    for (int x = -t; x <= t; ++x) {
        const Spinor a = from_l.at(x), b = from_r.at(-x);
        worst = std::max({worst, std::abs(std::real(a.right + b.left)),
                          std::abs(std::imag(a.right - b.left)),
                          std::abs(std::imag(a.left + b.right)),
                          std::abs(std::real(a.left - b.right))});
    }
    return make_check("thm2", worst, tol);
}

CheckResult check_corollary2(const CoinParams &params, int t, const Engine &engine, double tol) {
    const Distribution from_l = distribution(engine(InitialSpec::pure_l(), params, t));
    const Distribution from_r = distribution(engine(InitialSpec::pure_r(), params, t));
    double worst = 0.0;
    for (int x = -t; x <= t; ++x) {
        const auto a = from_l.at(x), b = from_r.at(-x);
        worst = std::max({worst, std::abs(a.p_right - b.p_left), std::abs(a.p_left - b.p_right)});
    }
    return make_check("cor2", worst, tol);
}

CheckResult check_corollary2(double beta, int t) {
    return check_corollary2(CoinParams{0.0, beta, 0.0, 0.0}, t);
}

std::vector<MixedStart> default_mixed_starts() {
    const double s = 1.0 / std::sqrt(2.0);
    return {
        {0.6, cplx(0.0, 0.8), pi / 5, 0.5},
        {s, s, 1.1, 0.0},
        {0.8, -0.6, -2.0, 1.0},
        {std::cos(0.3), std::polar(std::sin(0.3), 0.7), 2.9, 0.37},
        {cplx(0.0, 0.28), cplx(0.96, 0.0), -0.45, -0.8},
    };
}

CheckResult check_theorem3(const GProfile &profile, std::span<const MixedStart> starts,
                           const Engine &engine, double tol) {
    const auto errors = parallel_map<double>(starts.size(), [&](std::size_t i) {
        const MixedStart &s = starts[i];
        const CoinParams p{s.alpha_fraction * s.phi, profile.beta,
                           (1.0 - s.alpha_fraction) * s.phi, 0.0};
        const Distribution direct =
            distribution(engine(InitialSpec::custom(s.m, s.n), p, profile.t));
        return max_probability_diff(direct, profile.predict(s.m, s.n, s.phi));
    });
    double worst = 0.0;
    for (double e : errors) worst = std::max(worst, e);
    return make_check("thm3", worst, tol);
}

std::vector<CheckResult> check_theorem4(double beta, int t, std::span<const double> phis,
                                        std::span<const AlphaSplit> splits, const Engine &engine,
                                        double split_tol, double ratio_tol) {
    const std::size_t ns = std::max<std::size_t>(splits.size(), 1);
    const auto means = parallel_map<double>(phis.size() * splits.size(), [&](std::size_t i) {
        const CoinParams p = split_params(beta, phis[i / ns], splits[i % ns]);
        return mean_position(distribution(engine(InitialSpec::symmetric(), p, t)));
    });

    double split_worst = 0.0;
    std::vector<double> ratios;
    for (std::size_t f = 0; f < phis.size() && !splits.empty(); ++f) {
        const auto first = means.begin() + static_cast<std::ptrdiff_t>(f * ns);
        const auto [lo, hi] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(ns));
        split_worst = std::max(split_worst, *hi - *lo);
        if (std::abs(std::sin(phis[f])) > 0.1) ratios.push_back(*first / std::sin(phis[f]));
    }

    // Relative spread of <x>/sin(phi), scaled by max(|G|, 1).
    double ratio_worst = 0.0;
    if (!ratios.empty()) {
        const double scale = std::max(std::abs(ratios.front()), 1.0);
        for (double r : ratios) ratio_worst = std::max(ratio_worst, std::abs(r - ratios.front()) / scale);
    }
    return {make_check("thm4_split", split_worst, split_tol),
            make_check("thm4_ratio", ratio_worst, ratio_tol,
                       ratios.empty() ? "no phi with |sin(phi)| > 0.1; ratio check skipped"
                                      : "<x> vanishes only where sin(alpha+gamma) = 0 or G(beta,t) = 0")};
}

CheckResult check_engines(std::span<const CoinParams> coins, std::span<const InitialSpec> specs,
                          int t, const Engine &a, const Engine &b, double tol) {
    const std::size_t count = coins.size() * specs.size();
    const auto diffs = parallel_map<double>(count, [&](std::size_t i) {
        const CoinParams &p = coins[i / specs.size()];
        const InitialSpec &s = specs[i % specs.size()];
        return max_amplitude_diff(a(s, p, t), b(s, p, t));
    });
    double worst = 0.0;
    for (double d : diffs) worst = std::max(worst, d);
    return make_check("engines", worst, tol);
}

}  // namespace qwalk
