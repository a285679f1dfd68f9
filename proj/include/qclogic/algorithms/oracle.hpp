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

#include <cstdint>
#include <optional>
#include <vector>

#include "qclogic/json_format.hpp"
#include "qclogic/qcore/operators.hpp"

namespace qclogic::algorithms {

/// Largest n + m for which an oracle matrix is built.
inline constexpr std::size_t kMaxOracleBits = 10;

/// A total function {0,1}^n -> {0,1}^m, stored by input value.
class OracleFunction {
  public:
    /// Throws InvalidSpec unless the table has 2^n entries below 2^m.
    static OracleFunction create(std::size_t n, std::size_t m, std::vector<std::uint64_t> table);
    /// {"n": 1, "m": 1, "table": {"0": "0", "1": "1"}}. Throws ParseError
    /// for malformed documents and InvalidSpec for partial tables.
    static OracleFunction from_json(const Json &j);
    /// The four one-bit functions: f1 = id, f2 = not, f3 = 0, f4 = 1.
    /// Throws InvalidArgument outside 1..4.
    static OracleFunction one_bit(int k);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] std::uint64_t operator()(std::uint64_t x) const;
    [[nodiscard]] const std::vector<std::uint64_t> &table() const noexcept { return table_; }
    [[nodiscard]] Json to_json() const;

  private:
    OracleFunction(std::size_t n, std::size_t m, std::vector<std::uint64_t> t)
        : n_(n), m_(m), table_(std::move(t)) {}

    std::size_t n_;
    std::size_t m_;
    std::vector<std::uint64_t> table_;
};

/**
 * |x>|y> -> |x>|y xor f(x)> on n + m qubits, the input register leftmost
 * (basis index x * 2^m + y). Throws WidthMismatch when `ancilla_bits` is
 * given and differs from m, SizeCapExceeded beyond kMaxOracleBits.
 */
qcore::UnitaryGate build_oracle(const OracleFunction &f,
                                std::optional<std::size_t> ancilla_bits = std::nullopt);

} // namespace qclogic::algorithms
