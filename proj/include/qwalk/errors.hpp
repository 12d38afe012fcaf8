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

#include <stdexcept>
#include <string>

namespace qwalk {

/// Raised for out-of-domain inputs: non-finite angles, non-normalized initial
/// coefficients, too few momentum samples.
class InvalidParameter : public std::invalid_argument {
  public:
    explicit InvalidParameter(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a coin handed to the evolution is not unitary.
class InvalidCoin : public std::invalid_argument {
  public:
    explicit InvalidCoin(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a check is asked to run on an initial state outside its scope.
class InvalidSpec : public std::invalid_argument {
  public:
    explicit InvalidSpec(const std::string &what) : std::invalid_argument(what) {}
};

/// The closed-form eigenvectors of the momentum matrix break down at this k;
/// callers should fall back to direct matrix powers.
class DegenerateMode : public std::domain_error {
  public:
    explicit DegenerateMode(const std::string &what) : std::domain_error(what) {}
};

}  // namespace qwalk
