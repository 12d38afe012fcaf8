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

#include "qwalk/cli/csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk::cli {

std::string Table::meta_value(const std::string &key) const {
    for (const auto &[k, v] : metadata)
        if (k == key) return v;
    return {};
}

std::size_t Table::column(const std::string &name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw InvalidParameter("no column named '" + name + "'");
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_csv(std::ostream &out, const Table &table) {
    for (const auto &[key, value] : table.metadata) out << "# " << key << ": " << value << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

Table read_csv(std::istream &in) {
    Table table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const auto colon = line.find(": ", 2);
            if (colon == std::string::npos) throw InvalidParameter("bad metadata line: " + line);
            table.meta(line.substr(2, colon - 2), line.substr(colon + 2));
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (!have_header) {
            table.columns = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != table.columns.size()) throw InvalidParameter("ragged row: " + line);
        std::vector<double> row;
        for (const auto &cell : cells) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                throw InvalidParameter("bad number '" + cell + "'");
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw InvalidParameter("csv has no header row");
    return table;
}

nlohmann::json table_to_json(const Table &table) {
    nlohmann::json meta = nlohmann::json::object();
    for (const auto &[k, v] : table.metadata) meta[k] = v;
    return {{"metadata", meta}, {"columns", table.columns}, {"rows", table.rows}};
}

}  // namespace qwalk::cli
