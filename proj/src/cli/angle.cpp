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

#include "qwalk/cli/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk::cli {

namespace {

std::string strip(std::string_view text) {
    std::string out;
    for (char c : text)
        if (c != ' ' && c != '\t') out.push_back(c);
    return out;
}

// Whole-string decimal; std::nullopt-like failure via bool.
bool parse_number(std::string_view s, double &out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const char *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

[[noreturn]] void bad_angle(std::string_view text) {
    throw InvalidParameter("cannot parse angle '" + std::string(text) + "'");
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string s = strip(text);
    double value = 0.0;
    if (parse_number(s, value)) return value;

    const auto at = s.find("pi");
    if (at == std::string::npos) bad_angle(text);

    // [sign][coef['*']]pi['/'den]
    std::string_view head(s.data(), at);
    std::string_view tail(s.data() + at + 2, s.size() - at - 2);
    double sign = 1.0;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
        if (head.front() == '-') sign = -1.0;
        head.remove_prefix(1);
    }
    double coef = 1.0;
    if (!head.empty()) {
        if (head.back() == '*') head.remove_suffix(1);
        if (!parse_number(head, coef) || head.front() == '-' || head.front() == '+') bad_angle(text);
    }
    double den = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') bad_angle(text);
        tail.remove_prefix(1);
        if (!parse_number(tail, den) || den == 0.0) bad_angle(text);
    }
    return sign * (coef * std::numbers::pi) / den;
}

cplx parse_complex(std::string_view text) {
    const std::string s = strip(text);
    if (s.empty()) throw InvalidParameter("empty complex literal");
    double re = 0.0, im = 0.0;
    if (s.back() != 'i') {
        if (!parse_number(s, re)) throw InvalidParameter("cannot parse complex '" + s + "'");
        return {re, 0.0};
    }
    // Split before the last sign that is not the leading one or an exponent sign.
    std::size_t cut = 0;
    for (std::size_t i = s.size() - 1; i > 0; --i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            cut = i;
            break;
        }
    }
    const std::string real_part = s.substr(0, cut);
    std::string imag_part = s.substr(cut, s.size() - cut - 1);
    if (imag_part.empty() || imag_part == "+") imag_part = "1";
    if (imag_part == "-") imag_part = "-1";
    if ((!real_part.empty() && !parse_number(real_part, re)) || !parse_number(imag_part, im)) {
        throw InvalidParameter("cannot parse complex '" + s + "'");
    }
    return {re, im};
}

}  // namespace qwalk::cli
