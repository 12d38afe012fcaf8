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

#include <string>
#include <string_view>

#include "qwalk/coin.hpp"

namespace qwalk::cli {

/// Parses radians from a decimal ("0.7", "-1e-3") or a multiple of pi
/// ("pi", "-pi/2", "pi/6", "3*pi/4", "2pi"). Throws InvalidParameter.
double parse_angle(std::string_view text);

/// An angle as entered, kept next to its value so outputs can echo both.
struct Angle {
    std::string literal;
    double radians = 0.0;

    static Angle parse(std::string_view text) { return {std::string(text), parse_angle(text)}; }
};

/// Parses "0.6", "0.8i", "-i", "0.6-0.8i". Throws InvalidParameter.
cplx parse_complex(std::string_view text);

}  // namespace qwalk::cli
