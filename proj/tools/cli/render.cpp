// Copyright 2026 The qclogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/render.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qclogic::cli {

namespace {

void flatten(const Json &j, const std::string &path,
             std::vector<std::pair<std::string, std::string>> &rows) {
    if (j.is_object() && !j.empty()) {
        for (const auto &[key, value] : j.items()) {
            flatten(value, path.empty() ? key : path + "." + key, rows);
        }
    } else if (j.is_array() && !j.empty()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
        }
    } else {
        rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

} // namespace

std::string render_table(Json report) {
    canonicalize_numbers(report);
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto &row : rows) width = std::max(width, row.first.size());
    std::string out;
    for (const auto &[key, value] : rows) {
        out += key + std::string(width - key.size() + 2, ' ') + value + "\n";
    }
    return out;
}

} // namespace qclogic::cli
