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

#include "qwalk/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk::cli {

using nlohmann::json;
using std::numbers::pi;

namespace {

constexpr int kDefaultSpectrumSamples = 65;

const std::set<std::string> kSuites = {"all", "lemma1", "thm1", "thm2", "cor2", "thm3", "thm4"};
const std::set<std::string> kCheckNames = {"lemma1", "thm1",       "thm2",       "cor2",
                                           "thm3",   "thm4_split", "thm4_ratio", "engines"};

void require_steps(const RunConfig &c) {
    if (c.t < 0) throw InvalidParameter("--t must be nonnegative");
}

Engine engine_for(const RunConfig &c, EngineKind kind) {
    Engine e = kind == EngineKind::Spectral ? spectral_engine() : direct_engine();
    if (kind == EngineKind::Spectral && c.k_samples > 0) {
        const int samples = c.k_samples;
        e = [samples](const InitialSpec &s, const CoinParams &p, int t) {
            return propagate_fourier(s, p, t, samples);
        };
    }
    if (c.perturb != 0.0) e = perturbed_engine(std::move(e), c.perturb);
    return e;
}

void angle_meta(Table &table, const std::string &name, const Angle &a) {
    table.meta(name + "_literal", a.literal);
    table.meta(name, format_double(a.radians));
}

void coin_meta(Table &table, const RunConfig &c) {
    angle_meta(table, "alpha", c.alpha);
    angle_meta(table, "beta", c.beta);
    angle_meta(table, "gamma", c.gamma);
    angle_meta(table, "theta", c.theta);
}

std::string complex_text(cplx z) { return format_double(z.real()) + "," + format_double(z.imag()); }

double tolerance_for(const RunConfig &c, const std::string &name, double fallback) {
    const auto it = c.tolerances.find(name);
    return it == c.tolerances.end() ? fallback : it->second;
}

}  // namespace

Table run_evolve(const RunConfig &c) {
    require_steps(c);
    const InitialSpec spec = initial_spec(c);
    const CoinParams params = coin_params(c);
    const EngineKind primary = c.engine == EngineKind::Spectral ? EngineKind::Spectral : EngineKind::Direct;
    if (c.engine != EngineKind::Direct && c.k_samples > 0 && c.k_samples < 2 * c.t + 2) {
        throw InvalidParameter("--k-samples must be at least 2t+2");
    }
    const WalkState state = engine_for(c, primary)(spec, params, c.t);

    Table table;
    table.meta("command", "evolve");
    table.meta("engine", std::string(to_string(c.engine)));
    table.meta("init", std::string(to_string(c.init)));
    if (c.init == InitialSpec::Kind::Custom) {
        table.meta("m", complex_text(c.m));
        table.meta("n", complex_text(c.n));
    }
    table.meta("t", std::to_string(c.t));
    coin_meta(table, c);
    if (c.engine != EngineKind::Direct) {
        table.meta("k_samples", std::to_string(c.k_samples > 0 ? c.k_samples : 2 * c.t + 2));
    }
    if (c.engine == EngineKind::Both) {
        const WalkState other = engine_for(c, EngineKind::Spectral)(spec, params, c.t);
        table.meta("engine_max_discrepancy", format_double(max_amplitude_diff(state, other)));
    }

    table.columns = {"x", "p_L", "p_R", "p_total"};
    const Distribution dist = distribution(state);
    for (const auto &e : dist.entries()) {
        if (c.skip_zeros && e.total() == 0.0) continue;
        table.rows.push_back({static_cast<double>(e.x), e.p_left, e.p_right, e.total()});
    }
    return table;
}

Table run_sweep(const RunConfig &c) {
    require_steps(c);
    if (c.phi_steps < 2) throw InvalidParameter("--phi-steps must be at least 2");
    const std::vector<double> phis = linspace(c.phi_min.radians, c.phi_max.radians, c.phi_steps);
    const EngineKind primary = c.engine == EngineKind::Spectral ? EngineKind::Spectral : EngineKind::Direct;
    const SweepResult r =
        sweep_mean_position(c.beta.radians, c.t, phis, c.alpha_split, engine_for(c, primary));

    Table table;
    table.meta("command", "sweep");
    table.meta("engine", std::string(to_string(c.engine)));
    table.meta("init", "symmetric");
    table.meta("t", std::to_string(c.t));
    angle_meta(table, "beta", c.beta);
    angle_meta(table, "phi_min", c.phi_min);
    angle_meta(table, "phi_max", c.phi_max);
    table.meta("phi_steps", std::to_string(c.phi_steps));
    table.meta("alpha_split", std::string(to_string(c.alpha_split)));
    table.meta("fit_A", format_double(r.fit_a));
    table.meta("fit_B", format_double(r.fit_b));
    table.meta("fit_C", format_double(r.fit_c));
    table.meta("residual_rms", format_double(r.residual_rms));
    if (c.engine == EngineKind::Both) {
        const SweepResult other = sweep_mean_position(c.beta.radians, c.t, phis, c.alpha_split,
                                                      engine_for(c, EngineKind::Spectral));
        double worst = 0.0;
        for (std::size_t i = 0; i < phis.size(); ++i) {
            worst = std::max(worst, std::abs(r.samples[i].mean_x - other.samples[i].mean_x));
        }
        table.meta("engine_max_discrepancy", format_double(worst));
    }

    table.columns = {"phi", "mean_x"};
    for (const auto &s : r.samples) table.rows.push_back({s.phi, s.mean_x});
    return table;
}

Table run_spectrum(const RunConfig &c) {
    const int samples = c.k_samples > 0 ? c.k_samples : kDefaultSpectrumSamples;
    if (samples < 2) throw InvalidParameter("--k-samples must be at least 2 for a spectrum");
    const CoinParams params = coin_params(c);
    require_finite(params);

    Table table;
    table.meta("command", "spectrum");
    coin_meta(table, c);
    table.meta("k_samples", std::to_string(samples));
    table.columns = {"k",        "omega",    "lambda_a_re", "lambda_a_im", "lambda_b_re",
                     "lambda_b_im", "a_L_re", "a_L_im",      "a_R_re",      "a_R_im",
                     "b_L_re",   "b_L_im",   "b_R_re",      "b_R_im",      "degenerate"};
    for (const double k : linspace(-pi, pi, samples)) {
        const SpectralMode m = eigensystem_with_fallback(k, params);
        table.rows.push_back({k, m.omega, m.eigenvalue_a.real(), m.eigenvalue_a.imag(),
                              m.eigenvalue_b.real(), m.eigenvalue_b.imag(), m.vec_a[0].real(),
                              m.vec_a[0].imag(), m.vec_a[1].real(), m.vec_a[1].imag(),
                              m.vec_b[0].real(), m.vec_b[0].imag(), m.vec_b[1].real(),
                              m.vec_b[1].imag(), m.degenerate ? 1.0 : 0.0});
    }
    return table;
}

TheoremReport run_verify(const RunConfig &c) {
    require_steps(c);
    if (!kSuites.contains(c.suite)) throw InvalidParameter("unknown suite '" + c.suite + "'");
    for (const auto &[name, tol] : c.tolerances) {
        if (!kCheckNames.contains(name)) throw InvalidParameter("unknown tolerance name '" + name + "'");
        if (!(tol >= 0.0)) throw InvalidParameter("tolerance for " + name + " must be nonnegative");
    }
    const bool all = c.suite == "all";
    const auto want = [&](const char *s) { return all || c.suite == s; };
    const InitialSpec spec = initial_spec(c);
    const CoinParams params = coin_params(c);
    require_finite(params);
    const double beta = params.beta;
    const EngineKind primary = c.engine == EngineKind::Spectral ? EngineKind::Spectral : EngineKind::Direct;
    const Engine engine = engine_for(c, primary);

    TheoremReport report;
    if (want("lemma1")) {
        std::vector<double> thetas = {-pi / 2, 0.0, 0.7, 2.1};
        if (std::find(thetas.begin(), thetas.end(), params.theta) == thetas.end()) {
            thetas.push_back(params.theta);
        }
        report.checks.push_back(check_lemma1(params, thetas, spec, c.t, engine,
                                             tolerance_for(c, "lemma1", tolerance::kAmplitude)));
    }
    if (want("thm1")) {
        const std::vector<double> grid = {0.0, pi / 6, pi / 3, pi / 2};
        report.checks.push_back(check_theorem1(beta, grid, grid, spec, c.t, engine,
                                               tolerance_for(c, "thm1", tolerance::kProbability)));
    }
    if (want("thm2")) {
        report.checks.push_back(
            check_theorem2(params, c.t, engine, tolerance_for(c, "thm2", tolerance::kAmplitude)));
    }
    if (want("cor2")) {
        report.checks.push_back(
            check_corollary2(params, c.t, engine, tolerance_for(c, "cor2", tolerance::kAmplitude)));
    }
    if (want("thm3")) {
        const GProfile profile = extract_G(beta, c.t, engine);
        const auto starts = default_mixed_starts();
        report.checks.push_back(check_theorem3(profile, starts, engine,
                                               tolerance_for(c, "thm3", tolerance::kProbability)));
    }
    if (want("thm4")) {
        const std::vector<double> phis = {pi / 6, pi / 2, 5 * pi / 6, -pi / 3, pi};
        const std::vector<AlphaSplit> splits = {AlphaSplit::Zero, AlphaSplit::Half, AlphaSplit::Full};
        for (auto &r : check_theorem4(beta, c.t, phis, splits, engine,
                                      tolerance_for(c, "thm4_split", tolerance::kSplit),
                                      tolerance_for(c, "thm4_ratio", tolerance::kDerived))) {
            report.checks.push_back(std::move(r));
        }
    }
    if (c.engine == EngineKind::Both) {
        const std::vector<CoinParams> coins = {params, hadamard_params(), {0.3, beta, -1.1, 0.0}};
        const std::vector<InitialSpec> specs = {InitialSpec::pure_l(), InitialSpec::pure_r(),
                                                InitialSpec::symmetric()};
        report.checks.push_back(check_engines(coins, specs, c.t, engine,
                                              engine_for(c, EngineKind::Spectral),
                                              tolerance_for(c, "engines", tolerance::kEngines)));
    }
    return report;
}

json report_to_json(const TheoremReport &report) {
    json checks = json::array();
    for (const auto &c : report.checks) {
        json entry = {{"name", c.name},
                      {"max_violation", c.max_violation},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}};
        if (!c.note.empty()) entry["note"] = c.note;
        checks.push_back(entry);
    }
    return {{"checks", checks}, {"overall", report.overall()}};
}

namespace {

struct Flags {
    std::string alpha, beta, gamma, theta, init, m, n, phi_min, phi_max, alpha_split;
    std::string out, format, engine, suite, config;
    int t = 0, phi_steps = 0, k_samples = 0;
    bool skip_zeros = false;
    std::vector<std::string> tols;
    double perturb = 0.0;
};

void add_common(CLI::App *sub, Flags &f) {
    sub->add_option("--alpha", f.alpha, "coin angle alpha (radians or pi literal)");
    sub->add_option("--beta", f.beta, "coin angle beta");
    sub->add_option("--gamma", f.gamma, "coin angle gamma");
    sub->add_option("--theta", f.theta, "global phase theta");
    sub->add_option("--init", f.init, "initial coin state: L, R, symmetric, custom");
    sub->add_option("--m", f.m, "custom |0L> coefficient, e.g. 0.6");
    sub->add_option("--n", f.n, "custom |0R> coefficient, e.g. 0.8i");
    sub->add_option("--t", f.t, "number of steps");
    sub->add_option("--k-samples", f.k_samples, "momentum samples (0 = automatic)");
    sub->add_option("--out", f.out, "output path (default stdout)");
    sub->add_option("--format", f.format, "csv or json");
    sub->add_option("--engine", f.engine, "direct, spectral or both");
    sub->add_option("--config", f.config, "JSON RunConfig; its keys override flags");
}

// Flags that were actually given, on top of the defaults.
RunConfig config_from_flags(const CLI::App &sub, const Flags &f, Command cmd) {
    RunConfig c;
    c.command = cmd;
    const auto given = [&](const char *name) { return sub.get_option_no_throw(name) && sub.count(name) > 0; };
    if (given("--alpha")) c.alpha = Angle::parse(f.alpha);
    if (given("--beta")) c.beta = Angle::parse(f.beta);
    if (given("--gamma")) c.gamma = Angle::parse(f.gamma);
    if (given("--theta")) c.theta = Angle::parse(f.theta);
    if (given("--init")) c.init = parse_init(f.init);
    if (given("--m")) c.m = parse_complex(f.m);
    if (given("--n")) c.n = parse_complex(f.n);
    if (given("--t")) c.t = f.t;
    if (given("--k-samples")) c.k_samples = f.k_samples;
    if (given("--out")) c.out = f.out;
    if (given("--format")) c.format = parse_format(f.format);
    if (given("--engine")) c.engine = parse_engine(f.engine);
    if (given("--skip-zeros")) c.skip_zeros = f.skip_zeros;
    if (given("--phi-min")) c.phi_min = Angle::parse(f.phi_min);
    if (given("--phi-max")) c.phi_max = Angle::parse(f.phi_max);
    if (given("--phi-steps")) c.phi_steps = f.phi_steps;
    if (given("--alpha-split")) c.alpha_split = parse_alpha_split(f.alpha_split);
    if (given("--suite")) c.suite = f.suite;
    if (given("--perturb")) c.perturb = f.perturb;
    if (given("--tol")) {
        for (const auto &item : f.tols) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidParameter("--tol expects name=value, got " + item);
            double v = 0.0;
            try {
                v = std::stod(item.substr(eq + 1));
            } catch (const std::exception &) {
                throw InvalidParameter("--tol value is not a number: " + item);
            }
            c.tolerances[item.substr(0, eq)] = v;
        }
    }
    if (given("--config")) {
        std::ifstream in(f.config);
        if (!in) throw InvalidParameter("cannot read config file " + f.config);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw InvalidParameter(std::string("config is not valid JSON: ") + e.what());
        }
        apply_json(c, j);
        if (c.command != cmd) throw InvalidParameter("config command does not match subcommand");
    }
    return c;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qwalk: one-dimensional discrete-time quantum walks with a U(2) coin", "qwalk"};
    app.require_subcommand(1, 1);
    Flags f;

    CLI::App *evolve = app.add_subcommand("evolve", "evolve one walk and write its distribution");
    add_common(evolve, f);
    evolve->add_flag("--skip-zeros", f.skip_zeros, "omit sites with zero probability");

    CLI::App *sweep = app.add_subcommand("sweep", "average position of the symmetric start against alpha+gamma");
    add_common(sweep, f);
    sweep->add_option("--phi-min", f.phi_min, "first alpha+gamma");
    sweep->add_option("--phi-max", f.phi_max, "last alpha+gamma");
    sweep->add_option("--phi-steps", f.phi_steps, "number of phi samples (>= 2)");
    sweep->add_option("--alpha-split", f.alpha_split, "zero, half or full");

    CLI::App *spectrum = app.add_subcommand("spectrum", "dispersion and eigenvectors of M_k");
    add_common(spectrum, f);

    CLI::App *verify = app.add_subcommand("verify", "run the invariance and symmetry checks");
    add_common(verify, f);
    verify->add_option("--suite", f.suite, "all, lemma1, thm1, thm2, cor2, thm3, thm4");
    verify->add_option("--tol", f.tols, "tolerance override name=value (repeatable)");
    verify->add_option("--perturb", f.perturb, "negative control: kick amplitudes by this much");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    std::string payload;
    int status = kExitOk;
    RunConfig config;
    try {
        const CLI::App *sub = app.get_subcommands().front();
        const Command cmd = parse_command(sub->get_name());
        config = config_from_flags(*sub, f, cmd);
        std::ostringstream buf;
        if (cmd == Command::Verify) {
            const TheoremReport report = run_verify(config);
            buf << json{{"config", to_json(config)}, {"results", report_to_json(report)}}.dump(2) << '\n';
            if (!report.overall()) status = kExitVerifyFailed;
        } else {
            const Table table = cmd == Command::Evolve  ? run_evolve(config)
                                : cmd == Command::Sweep ? run_sweep(config)
                                                        : run_spectrum(config);
            if (config.format == OutputFormat::Json) {
                buf << json{{"config", to_json(config)}, {"results", table_to_json(table)}}.dump(2) << '\n';
            } else {
                write_csv(buf, table);
            }
        }
        payload = buf.str();
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    if (config.out.empty()) {
        out << payload;
        return status;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file || !(file << payload) || !file.flush()) {
        err << "error: cannot write " << config.out << '\n';
        return kExitIo;
    }
    if (status == kExitVerifyFailed) err << "verification failed\n";
    return status;
}

}  // namespace qwalk::cli
