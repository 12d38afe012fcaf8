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

#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kCoinTolerance = 1e-9;

void require_unitary(const CoinMatrix &coin) {
    const double defect = unitarity_defect(coin);
    if (!(defect <= kCoinTolerance)) {
        throw InvalidCoin("coin is not unitary (defect " + std::to_string(defect) + ")");
    }
}

// Coin then conditional shift: L moves to x-1, R to x+1. `src` holds sites
// -t..t, `dst` receives -(t+1)..t+1.
void step_into(std::span<const Spinor> src, std::span<Spinor> dst, const CoinMatrix &c) {
    const cplx c00 = c(0, 0), c01 = c(0, 1), c10 = c(1, 0), c11 = c(1, 1);
    std::fill(dst.begin(), dst.end(), Spinor{});
    // Site x sits at src[i] and dst[i + 1].
    for (std::size_t i = 0; i < src.size(); ++i) {
        const cplx l = src[i].left;
        const cplx r = src[i].right;
        dst[i].left = c00 * l + c01 * r;
        dst[i + 2].right = c10 * l + c11 * r;
    }
}

}  // namespace

InitialSpec InitialSpec::pure_l() { return {Kind::PureL, 1.0, 0.0}; }

InitialSpec InitialSpec::pure_r() { return {Kind::PureR, 0.0, 1.0}; }

InitialSpec InitialSpec::symmetric() {
    const double s = 1.0 / std::sqrt(2.0);
    return {Kind::Symmetric, s, cplx(0.0, s)};
}

InitialSpec InitialSpec::custom(cplx m, cplx n) {
    const double norm = std::norm(m) + std::norm(n);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
        throw InvalidParameter("initial coefficients must satisfy |m|^2 + |n|^2 = 1, got " +
                               std::to_string(norm));
    }
    return {Kind::Custom, m, n};
}

std::string_view to_string(InitialSpec::Kind kind) {
    switch (kind) {
    case InitialSpec::Kind::PureL: return "L";
    case InitialSpec::Kind::PureR: return "R";
    case InitialSpec::Kind::Symmetric: return "symmetric";
    case InitialSpec::Kind::Custom: return "custom";
    }
    return "?";
}

WalkState::WalkState(int steps, std::vector<Spinor> amplitudes)
    : steps_(steps), amps_(std::move(amplitudes)) {
    if (steps_ < 0) throw InvalidParameter("step count must be nonnegative");
    if (amps_.size() != static_cast<std::size_t>(2 * steps_ + 1)) {
        throw InvalidParameter("expected " + std::to_string(2 * steps_ + 1) + " sites, got " +
                               std::to_string(amps_.size()));
    }
}

Spinor WalkState::at(int x) const {
    if (x < -steps_ || x > steps_) return {};
    return amps_[static_cast<std::size_t>(x + steps_)];
}

double WalkState::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) s += a.norm_squared();
    return s;
}

double WalkState::max_forbidden_amplitude() const {
    double worst = 0.0;
    for (int x = -steps_; x <= steps_; ++x) {
        if (std::abs(x + steps_) % 2 == 0) continue;
        const Spinor a = at(x);
        worst = std::max({worst, std::abs(a.left), std::abs(a.right)});
    }
    return worst;
}

WalkState initial_state(const InitialSpec &spec) {
    return WalkState(0, {Spinor{spec.m(), spec.n()}});
}

WalkState step(const WalkState &state, const CoinMatrix &coin) {
    require_unitary(coin);
    std::vector<Spinor> next(state.amplitudes().size() + 2);
    step_into(state.amplitudes(), next, coin);
    return WalkState(state.steps() + 1, std::move(next));
}

WalkState evolve(const InitialSpec &spec, const CoinParams &params, int t) {
    if (t < 0) throw InvalidParameter("step count must be nonnegative");
    const CoinMatrix coin = make_coin(params);
    require_unitary(coin);

    // Two buffers sized for the final state; the live window grows by one
    // site per side per step, centred on index t.
    const std::size_t full = static_cast<std::size_t>(2 * t + 1);
    std::vector<Spinor> cur(full), nxt(full);
    cur[static_cast<std::size_t>(t)] = Spinor{spec.m(), spec.n()};
    for (int s = 0; s < t; ++s) {
        const auto lo = static_cast<std::size_t>(t - s);
        const auto width = static_cast<std::size_t>(2 * s + 1);
        step_into(std::span<const Spinor>(cur).subspan(lo, width),
                  std::span<Spinor>(nxt).subspan(lo - 1, width + 2), coin);
        std::swap(cur, nxt);
    }
    return WalkState(t, std::move(cur));
}

double max_amplitude_diff(const WalkState &a, const WalkState &b) {
    const int reach = std::max(a.steps(), b.steps());
    double worst = 0.0;
    for (int x = -reach; x <= reach; ++x) {
        const Spinor u = a.at(x), v = b.at(x);
        worst = std::max({worst, std::abs(u.left - v.left), std::abs(u.right - v.right)});
    }
    return worst;
}

}  // namespace qwalk
