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

#include "qclogic/json_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qclogic/error.hpp"

namespace qclogic {

double round_significant(double x, int digits) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

void canonicalize_numbers(Json &j, int digits) {
    if (j.is_number_float()) {
        j = round_significant(j.get<double>(), digits);
    } else if (j.is_array() || j.is_object()) {
        for (auto &child : j) {
            canonicalize_numbers(child, digits);
        }
    }
}

std::string dump_report(Json j) {
    canonicalize_numbers(j);
    return j.dump(2) + "\n";
}

Json parse_json(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        fail(ErrorKind::ParseError, what + ": " + e.what());
    }
}

Json load_json_argument(const std::string &source, const std::string &what) {
    std::error_code ec;
    if (!source.empty() && source.front() != '{' && source.front() != '[' &&
        std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        if (!in) {
            fail(ErrorKind::ParseError, "cannot open " + what + " file '" + source + "'");
        }
        std::ostringstream os;
        os << in.rdbuf();
        return parse_json(os.str(), what + " file '" + source + "'");
    }
    return parse_json(source, what);
}

} // namespace qclogic
