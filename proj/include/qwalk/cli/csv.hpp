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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qwalk::cli {

/// Numeric output table: `# key: value` metadata lines, one header row, then
/// comma-separated data rows.
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void meta(std::string key, std::string value) {
        metadata.emplace_back(std::move(key), std::move(value));
    }
    /// Empty string if the key is absent.
    std::string meta_value(const std::string &key) const;
    std::size_t column(const std::string &name) const;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

void write_csv(std::ostream &out, const Table &table);

/// Inverse of write_csv. Throws InvalidParameter on malformed input.
Table read_csv(std::istream &in);

nlohmann::json table_to_json(const Table &table);

}  // namespace qwalk::cli
