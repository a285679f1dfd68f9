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

#pragma once

#include <string>

#include <json.hpp>

namespace qclogic {

using Json = nlohmann::json;

/// Digits kept when numbers are emitted in reports.
inline constexpr int kReportSignificantDigits = 12;

/// Rounds to `digits` significant decimal digits; -0 becomes 0.
double round_significant(double x, int digits = kReportSignificantDigits);

/// Rounds every floating-point number in the tree in place.
void canonicalize_numbers(Json &j, int digits = kReportSignificantDigits);

/// Canonical report text: sorted keys, rounded floats, two-space indent,
/// trailing newline. Identical inputs give byte-identical output.
std::string dump_report(Json j);

/// Parses JSON text, converting parser errors into ParseError.
Json parse_json(const std::string &text, const std::string &what);

/// Reads `source` as a file when one exists at that path, otherwise treats
/// it as inline JSON text.
Json load_json_argument(const std::string &source, const std::string &what);

} // namespace qclogic
