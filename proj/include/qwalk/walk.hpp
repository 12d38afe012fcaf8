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

#include <span>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Amplitude pair at one lattice site.
struct Spinor {
    cplx left{};
    cplx right{};

    double norm_squared() const { return std::norm(left) + std::norm(right); }
    friend bool operator==(const Spinor &, const Spinor &) = default;
};

/// Initial coin state m|0L> + n|0R> localized at the origin.
class InitialSpec {
  public:
    enum class Kind { PureL, PureR, Symmetric, Custom };

    static InitialSpec pure_l();
    static InitialSpec pure_r();
    /// (|0L> + i|0R>) / sqrt(2)
    static InitialSpec symmetric();
    /// Throws InvalidParameter unless |m|^2 + |n|^2 = 1 within 1e-12.
    static InitialSpec custom(cplx m, cplx n);

    Kind kind() const { return kind_; }
    cplx m() const { return m_; }
    cplx n() const { return n_; }

  private:
    InitialSpec(Kind kind, cplx m, cplx n) : kind_(kind), m_(m), n_(n) {}

    Kind kind_;
    cplx m_;
    cplx n_;
};

std::string_view to_string(InitialSpec::Kind kind);

/// Position-space wavefunction after `steps()` steps from the origin.
///
/// Storage is dense over [-t, t]; sites with x + t odd are kept (as zeros) so
/// that site x always lives at index x + t.
class WalkState {
  public:
    /// Takes amplitudes for x = -t .. t; throws InvalidParameter on a size
    /// mismatch.
    WalkState(int steps, std::vector<Spinor> amplitudes);

    int steps() const { return steps_; }
    int offset() const { return -steps_; }
    int min_site() const { return -steps_; }
    int max_site() const { return steps_; }
    std::span<const Spinor> amplitudes() const { return amps_; }

    /// Zero outside the stored range.
    Spinor at(int x) const;

    double norm_squared() const;

    /// Largest modulus found where the support or parity rule demands zero.
    double max_forbidden_amplitude() const;

  private:
    int steps_;
    std::vector<Spinor> amps_;
};

WalkState initial_state(const InitialSpec &spec);

/// One application of S (I (x) coin). Throws InvalidCoin if the coin misses
/// unitarity by more than 1e-9.
WalkState step(const WalkState &state, const CoinMatrix &coin);

/// t homogeneous steps with make_coin(params) from initial_state(spec).
WalkState evolve(const InitialSpec &spec, const CoinParams &params, int t);

/// Largest entrywise |a - b| over the union of both supports.
double max_amplitude_diff(const WalkState &a, const WalkState &b);

}  // namespace qwalk
