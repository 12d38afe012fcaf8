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

#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk {

Mat2 Mat2::identity() {
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

Mat2 Mat2::adjoint() const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(e[j][i]);
    return r;
}

cplx Mat2::determinant() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

Vec2 Mat2::apply(const Vec2 &v) const {
    return {e[0][0] * v[0] + e[0][1] * v[1], e[1][0] * v[0] + e[1][1] * v[1]};
}

Mat2 Mat2::operator*(const Mat2 &o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = e[i][0] * o(0, j) + e[i][1] * o(1, j);
    return r;
}

Mat2 Mat2::operator*(cplx s) const {
    Mat2 r = *this;
    for (auto &row : r.e)
        for (auto &x : row) x *= s;
    return r;
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

void require_finite(const CoinParams &p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma) ||
        !std::isfinite(p.theta)) {
        throw InvalidParameter("coin angles must be finite");
    }
}

CoinMatrix su2_part(const CoinParams &p) {
    require_finite(p);
    const double cb = std::cos(p.beta);
    const double sb = std::sin(p.beta);
    Mat2 m;
    m(0, 0) = cb * std::polar(1.0, p.alpha);
    m(0, 1) = -sb * std::polar(1.0, -p.gamma);
    m(1, 0) = sb * std::polar(1.0, p.gamma);
    m(1, 1) = cb * std::polar(1.0, -p.alpha);
    return m;
}

CoinMatrix make_coin(const CoinParams &p) {
    return su2_part(p) * std::polar(1.0, p.theta);
}

CoinParams hadamard_params() {
    using std::numbers::pi;
    return {pi / 2, pi / 4, pi / 2, -pi / 2};
}

double unitarity_defect(const CoinMatrix &m) {
    return max_abs_diff(m.adjoint() * m, Mat2::identity());
}

bool check_unitary(const CoinMatrix &m, double tol) { return unitarity_defect(m) <= tol; }

}  // namespace qwalk
