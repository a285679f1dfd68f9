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

#include "qclogic/qcore/matrix_json.hpp"

#include <string>
#include <vector>

#include "qclogic/error.hpp"

namespace qclogic::qcore {

Json matrix_to_json(const ComplexMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (const Complex z : m.row_major()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return Json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

namespace {

std::vector<double> numbers(const Json &j, const char *key, std::size_t expected) {
    const Json &arr = j.at(key);
    if (!arr.is_array() || arr.size() != expected) {
        fail(ErrorKind::ParseError, std::string("matrix literal '") + key +
                                        "' must be an array of " +
                                        std::to_string(expected) + " numbers");
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto &x : arr) {
        if (!x.is_number()) {
            fail(ErrorKind::ParseError,
                 std::string("matrix literal '") + key + "' holds a non-number");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

} // namespace

ComplexMatrix matrix_from_json(const Json &j, std::size_t max_dim) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
        fail(ErrorKind::ParseError, "matrix literal needs 'dim' and 're'");
    }
    if (!j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() == 0) {
        fail(ErrorKind::ParseError, "matrix literal 'dim' must be a positive integer");
    }
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim > max_dim) {
        fail(ErrorKind::SizeCapExceeded,
             "matrix dim " + std::to_string(dim) + " exceeds cap " +
                 std::to_string(max_dim));
    }
    const std::size_t count = dim * dim;
    const std::vector<double> re = numbers(j, "re", count);
    const std::vector<double> im =
        j.contains("im") ? numbers(j, "im", count) : std::vector<double>(count, 0.0);
    std::vector<Complex> entries(count);
    for (std::size_t i = 0; i < count; ++i) {
        entries[i] = {re[i], im[i]};
    }
    try {
        return ComplexMatrix::from_row_major(dim, entries);
    } catch (const ValidationFailure &e) {
        fail(ErrorKind::ParseError, std::string("matrix literal: ") + e.what());
    }
}

} // namespace qclogic::qcore
