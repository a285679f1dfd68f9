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

#include "qclogic/algorithms/oracle.hpp"

#include <string>

namespace qclogic::algorithms {

namespace {

std::string bits(std::uint64_t v, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((v >> (width - 1 - i)) & 1U) s[i] = '1';
    }
    return s;
}

std::uint64_t parse_bits(const std::string &s, std::size_t width, const char *what) {
    if (s.size() != width) {
        fail(ErrorKind::ParseError, std::string(what) + " '" + s + "' should have " +
                                        std::to_string(width) + " bits");
    }
    std::uint64_t v = 0;
    for (const char c : s) {
        if (c != '0' && c != '1') {
            fail(ErrorKind::ParseError, std::string(what) + " '" + s + "' is not a bit string");
        }
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
}

} // namespace

OracleFunction OracleFunction::create(std::size_t n, std::size_t m,
                                      std::vector<std::uint64_t> table) {
    if (n + m > kMaxOracleBits || m == 0) {
        fail(ErrorKind::InvalidSpec, "oracle widths n=" + std::to_string(n) +
                                         ", m=" + std::to_string(m) + " unsupported");
    }
    if (table.size() != (std::size_t{1} << n)) {
        fail(ErrorKind::InvalidSpec, "oracle table has " + std::to_string(table.size()) +
                                         " entries, expected " +
                                         std::to_string(std::size_t{1} << n));
    }
    for (const auto v : table) {
        if (v >> m) {
            fail(ErrorKind::InvalidSpec, "oracle value " + std::to_string(v) + " exceeds " +
                                             std::to_string(m) + " bits");
        }
    }
    return OracleFunction(n, m, std::move(table));
}

OracleFunction OracleFunction::from_json(const Json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("table") ||
        !j["n"].is_number_unsigned() || !j["m"].is_number_unsigned() || !j["table"].is_object()) {
        fail(ErrorKind::ParseError, "oracle document needs unsigned 'n', 'm' and a 'table' object");
    }
    const auto n = j["n"].get<std::size_t>();
    const auto m = j["m"].get<std::size_t>();
    if (n + m > kMaxOracleBits) {
        fail(ErrorKind::InvalidSpec, "oracle too wide");
    }
    std::vector<std::uint64_t> table(std::size_t{1} << n, 0);
    std::vector<bool> seen(table.size(), false);
    for (const auto &[key, value] : j["table"].items()) {
        if (!value.is_string()) fail(ErrorKind::ParseError, "oracle outputs must be bit strings");
        const auto x = parse_bits(key, n, "oracle input");
        if (seen[x]) fail(ErrorKind::ParseError, "oracle input '" + key + "' listed twice");
        table[x] = parse_bits(value.get<std::string>(), m, "oracle output");
        seen[x] = true;
    }
    for (std::size_t x = 0; x < seen.size(); ++x) {
        if (!seen[x]) {
            fail(ErrorKind::InvalidSpec, "oracle table misses input '" + bits(x, n) + "'");
        }
    }
    return create(n, m, std::move(table));
}

OracleFunction OracleFunction::one_bit(int k) {
    switch (k) {
    case 1: return create(1, 1, {0, 1});
    case 2: return create(1, 1, {1, 0});
    case 3: return create(1, 1, {0, 0});
    case 4: return create(1, 1, {1, 1});
    default: fail(ErrorKind::InvalidArgument, "one-bit functions are f1..f4");
    }
}

std::uint64_t OracleFunction::operator()(std::uint64_t x) const {
    if (x >= table_.size()) {
        fail(ErrorKind::IndexOutOfRange, "oracle input " + std::to_string(x) + " out of range");
    }
    return table_[x];
}

Json OracleFunction::to_json() const {
    Json table = Json::object();
    for (std::size_t x = 0; x < table_.size(); ++x) {
        table[bits(x, n_)] = bits(table_[x], m_);
    }
    return {{"n", n_}, {"m", m_}, {"table", std::move(table)}};
}

qcore::UnitaryGate build_oracle(const OracleFunction &f, std::optional<std::size_t> ancilla_bits) {
    if (ancilla_bits && *ancilla_bits != f.m()) {
        fail(ErrorKind::WidthMismatch, "oracle writes " + std::to_string(f.m()) +
                                           " bits into a " + std::to_string(*ancilla_bits) +
                                           "-qubit register");
    }
    const std::size_t ys = std::size_t{1} << f.m();
    const std::size_t dim = f.table().size() * ys;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < f.table().size(); ++x) {
        for (std::size_t y = 0; y < ys; ++y) {
            u(static_cast<Eigen::Index>(x * ys + (y ^ f(x))),
              static_cast<Eigen::Index>(x * ys + y)) = 1.0;
        }
    }
    return qcore::UnitaryGate::validate(qcore::ComplexMatrix(std::move(u)));
}

} // namespace qclogic::algorithms
