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

#include "qwalk/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

cplx dot_conj(const Vec2 &u, const Vec2 &v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
}

Vec2 momentum_power_apply(const Mat2 &m, int t, Vec2 v) {
    for (int s = 0; s < t; ++s) v = m.apply(v);
    return v;
}

}  // namespace

MomentumMatrix momentum_matrix(double k, const CoinParams &p) {
    if (!std::isfinite(k)) throw InvalidParameter("quasi-momentum must be finite");
    require_finite(p);
    const double cb = std::cos(p.beta);
    const double sb = std::sin(p.beta);
    MomentumMatrix mk{k, {}};
    mk.entries(0, 0) = cb * std::polar(1.0, -(k - p.alpha));
    mk.entries(0, 1) = -sb * std::polar(1.0, -(k + p.gamma));
    mk.entries(1, 0) = sb * std::polar(1.0, k + p.gamma);
    mk.entries(1, 1) = cb * std::polar(1.0, k - p.alpha);
    return mk;
}

SpectralMode eigensystem(double k, const CoinParams &p) {
    if (!std::isfinite(k)) throw InvalidParameter("quasi-momentum must be finite");
    require_finite(p);
    const double cb = std::cos(p.beta);
    const double sb = std::sin(p.beta);
    const double ch = std::cos(k - p.alpha);
    const double sh = std::sin(k - p.alpha);

    // sin^2 omega = sin^2 beta + cos^2 beta sin^2(k - alpha), which keeps
    // sin omega accurate where arccos would not be.
    const double cos_w = ch * cb;
    const double sin_w = std::hypot(sb, cb * sh);
    if (sin_w <= kDegeneracyThreshold) {
        throw DegenerateMode("sin(omega) vanishes at k = " + std::to_string(k));
    }

    // |Q^a| = sin w - u and |Q^b| = sin w + u with u = sin(k-alpha) cos beta.
    // One of the two cancels; (sin w - u)(sin w + u) = sin^2 beta recovers it.
    const double u = sh * cb;
    double qa = sin_w - u;
    double qb = sin_w + u;
    if (u > 0.0) {
        qa = sb * sb / qb;
    } else {
        qb = sb * sb / qa;
    }
    const double norm_a = std::hypot(sb, qa);
    const double norm_b = std::hypot(sb, qb);
    if (norm_a <= kDegeneracyThreshold || norm_b <= kDegeneracyThreshold) {
        throw DegenerateMode("eigenvector norm vanishes at k = " + std::to_string(k));
    }

    const cplx pk = -sb * std::polar(1.0, -(k + p.gamma));
    SpectralMode mode;
    mode.k = k;
    mode.omega = std::atan2(sin_w, cos_w);
    mode.eigenvalue_a = std::polar(1.0, -mode.omega);
    mode.eigenvalue_b = std::polar(1.0, mode.omega);
    mode.vec_a = {pk / norm_a, cplx(0.0, -qa / norm_a)};
    mode.vec_b = {pk / norm_b, cplx(0.0, qb / norm_b)};
    return mode;
}

SpectralMode eigensystem_with_fallback(double k, const CoinParams &p) {
    try {
        return eigensystem(k, p);
    } catch (const DegenerateMode &) {
    }
    const Mat2 mk = momentum_matrix(k, p).entries;
    const double cos_w = std::cos(k - p.alpha) * std::cos(p.beta);
    const double sin_w = std::hypot(std::sin(p.beta), std::cos(p.beta) * std::sin(k - p.alpha));
    SpectralMode mode;
    mode.k = k;
    mode.omega = std::atan2(sin_w, cos_w);
    mode.eigenvalue_a = std::polar(1.0, -mode.omega);
    mode.eigenvalue_b = std::polar(1.0, mode.omega);
    const bool l_is_a = std::abs(mk(0, 0) - mode.eigenvalue_a) <= std::abs(mk(1, 1) - mode.eigenvalue_a);
    const Vec2 e_l{1.0, 0.0}, e_r{0.0, 1.0};
    mode.vec_a = l_is_a ? e_l : e_r;
    mode.vec_b = l_is_a ? e_r : e_l;
    mode.degenerate = true;
    return mode;
}

WalkState propagate_fourier(const InitialSpec &spec, const CoinParams &p, int t, int samples) {
    if (t < 0) throw InvalidParameter("step count must be nonnegative");
    if (samples < 2 * t + 2) {
        throw InvalidParameter("need at least 2t+2 = " + std::to_string(2 * t + 2) +
                               " momentum samples, got " + std::to_string(samples));
    }
    require_finite(p);
    using std::numbers::pi;
    const auto n = static_cast<std::size_t>(samples);
    const Vec2 psi0{spec.m(), spec.n()};

    // Psi~(k, 0) = (m, n) for a walker starting at the origin.
    const auto evolved = parallel_map<Vec2>(n, [&](std::size_t j) -> Vec2 {
        const double k = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
        try {
            const SpectralMode mode = eigensystem(k, p);
            const cplx ca = dot_conj(mode.vec_a, psi0) * std::polar(1.0, -mode.omega * t);
            const cplx cb = dot_conj(mode.vec_b, psi0) * std::polar(1.0, mode.omega * t);
            return {ca * mode.vec_a[0] + cb * mode.vec_b[0], ca * mode.vec_a[1] + cb * mode.vec_b[1]};
        } catch (const DegenerateMode &) {
            return momentum_power_apply(momentum_matrix(k, p).entries, t, psi0);
        }
    });

    // Psi(x) = (1/N) sum_j Psi~(k_j) e^{-i k_j x}; with k_j = -pi + 2 pi j / N
    // the phase is (-1)^x e^{-2 pi i j x / N}, taken from an exact root table.
    std::vector<cplx> roots(n);
    for (std::size_t r = 0; r < n; ++r) {
        roots[r] = std::polar(1.0, 2.0 * pi * static_cast<double>(r) / static_cast<double>(n));
    }
    const cplx phase = std::polar(1.0, p.theta * t);
    const double inv_n = 1.0 / static_cast<double>(n);
    const auto sites = static_cast<std::size_t>(2 * t + 1);
    auto amps = parallel_map<Spinor>(sites, [&](std::size_t i) -> Spinor {
        const long long x = static_cast<long long>(i) - t;
        if ((x + t) % 2 != 0) return {};
        const long long nn = static_cast<long long>(n);
        const long long xm = ((x % nn) + nn) % nn;
        cplx left = 0.0, right = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto r = static_cast<std::size_t>((static_cast<long long>(j) * xm) % nn);
            const cplx w = std::conj(roots[r]);
            left += evolved[j][0] * w;
            right += evolved[j][1] * w;
        }
        const double sign = (x % 2 == 0) ? inv_n : -inv_n;
        return {left * sign * phase, right * sign * phase};
    });
    return WalkState(t, std::move(amps));
}

}  // namespace qwalk
