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

#include "qwalk/coin.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// One step of the walk in momentum space, Psi~(k, t+1) = M_k Psi~(k, t) with
/// the transform Psi~(k) = sum_x Psi(x) e^{ikx}.
struct MomentumMatrix {
    double k = 0.0;
    Mat2 entries;
};

/// [[ e^{-i(k-alpha)} cos beta, -e^{-i(k+gamma)} sin beta ],
///  [ e^{ i(k+gamma)} sin beta,  e^{ i(k-alpha)} cos beta ]]
///
/// The global phase theta is not part of M_k.
MomentumMatrix momentum_matrix(double k, const CoinParams &params);

/// Eigenpairs of M_k. Eigenvalues are e^{-i omega} (mode a) and e^{+i omega}
/// (mode b) with cos omega = cos(k - alpha) cos beta and omega in [0, pi].
///
/// Eigenvectors are (P_k, Q_k) / C_k with
///     P_k   = -e^{-i(k+gamma)} sin beta
///     Q_k^a = -i sin omega + i sin(k-alpha) cos beta
///     Q_k^b =  i sin omega + i sin(k-alpha) cos beta
/// and C_k the Euclidean norm of (P_k, Q_k).
struct SpectralMode {
    double k = 0.0;
    double omega = 0.0;
    cplx eigenvalue_a;
    cplx eigenvalue_b;
    Vec2 vec_a{};
    Vec2 vec_b{};
    /// Set by eigensystem_with_fallback when the basis vectors stand in.
    bool degenerate = false;
};

/// sin omega at or below this counts as degenerate, as does a vanishing C_k.
inline constexpr double kDegeneracyThreshold = 1e-9;

/// Throws DegenerateMode when sin omega <= kDegeneracyThreshold or when either
/// eigenvector norm C_k^{a,b} falls to the threshold (sin beta ~ 0).
SpectralMode eigensystem(double k, const CoinParams &params);

/// eigensystem(), except that at degenerate points (where sin beta ~ 0 makes
/// M_k diagonal to within the threshold) the L/R basis vectors are returned,
/// each paired with the eigenvalue its diagonal entry is closest to.
SpectralMode eigensystem_with_fallback(double k, const CoinParams &params);

/// Momentum-space evolution: each of `samples` points k_j = -pi + 2 pi j / samples
/// is evolved through the eigenbasis of M_k (or by direct powers of M_k at
/// degenerate points), then transformed back to positions.
///
/// Requires samples >= 2t + 2. The returned amplitudes carry the U(2) phase
/// e^{i theta t} so they match evolve() exactly, not just in probability.
WalkState propagate_fourier(const InitialSpec &spec, const CoinParams &params, int t,
                            int samples);

}  // namespace qwalk
