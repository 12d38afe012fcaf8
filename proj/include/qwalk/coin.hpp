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

#include <array>
#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

/// Two-component chirality vector, index 0 = L, index 1 = R.
using Vec2 = std::array<cplx, 2>;

/// Dense 2x2 complex matrix with (L, R) row/column order.
struct Mat2 {
    std::array<std::array<cplx, 2>, 2> e{};

    cplx &operator()(int r, int c) { return e[r][c]; }
    const cplx &operator()(int r, int c) const { return e[r][c]; }

    static Mat2 identity();

    Mat2 adjoint() const;
    cplx determinant() const;
    cplx trace() const { return e[0][0] + e[1][1]; }

    Vec2 apply(const Vec2 &v) const;
    Mat2 operator*(const Mat2 &o) const;
    Mat2 operator*(cplx s) const;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Mat2 &a, const Mat2 &b);

using CoinMatrix = Mat2;

/// The four angles of a U(2) coin
///
///     e^{i theta} [[ e^{i alpha} cos beta, -e^{-i gamma} sin beta ],
///                  [ e^{i gamma} sin beta,  e^{-i alpha} cos beta ]]
///
/// Angles are plain radians; no range normalization is applied.
struct CoinParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double theta = 0.0;

    /// The only angle combination the average position depends on.
    double phi() const { return alpha + gamma; }
};

/// Throws InvalidParameter if any angle is NaN or infinite.
void require_finite(const CoinParams &params);

CoinMatrix make_coin(const CoinParams &params);

/// make_coin with the global phase dropped; determinant is 1.
CoinMatrix su2_part(const CoinParams &params);

/// (pi/2, pi/4, pi/2, -pi/2), the point that reproduces the Hadamard matrix.
CoinParams hadamard_params();

/// max entry of |m^dagger m - I|.
double unitarity_defect(const CoinMatrix &m);

bool check_unitary(const CoinMatrix &m, double tol);

}  // namespace qwalk
