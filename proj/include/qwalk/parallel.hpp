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

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace qwalk {

/// Worker count: WALK_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for every i in [0, n), spread over worker_count() threads.
/// The first exception thrown by any call is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

/// Results land in index order regardless of scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F &&f) {
    std::vector<std::optional<T>> slots(n);
    parallel_for(n, [&](std::size_t i) { slots[i].emplace(f(i)); });
    std::vector<T> out;
    out.reserve(n);
    for (auto &s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace qwalk
