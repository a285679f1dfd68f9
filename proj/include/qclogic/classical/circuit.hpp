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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qclogic::classical {

/// Largest input count for which exhaustive comparison is attempted.
inline constexpr std::size_t kMaxExhaustiveInputs = 20;

/**
 * A fixed-length string of bits x0 x1 ... x(n-1).
 *
 * x0 is the leftmost character in text form and the most significant bit
 * of value(), so ascending value() order is lexicographic string order.
 */
class BitString {
  public:
    BitString(std::size_t length, std::uint64_t value);
    /// Parses "0101". Throws ParseError on other characters.
    static BitString parse(std::string_view text);

    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] bool operator[](std::size_t i) const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const BitString &, const BitString &) = default;
    friend auto operator<=>(const BitString &, const BitString &) = default;

  private:
    std::size_t length_;
    std::uint64_t value_;
};

enum class BoolGate { Or, And, Not };

/// Truth table of the elementary gates. Throws ArityMismatch.
bool eval_gate(BoolGate gate, std::span<const bool> args);

/**
 * Boolean circuit over {OR, AND, NOT} with inputs x0..x(arity-1).
 *
 * Stored as a topologically ordered node list: children always precede
 * their parent and the last node is the output.
 */
class BoolCircuit {
  public:
    enum class Op : std::uint8_t { Input, Or, And, Not };
    struct Node {
        Op op;
        std::uint32_t a = 0; // input index for Input, first child otherwise
        std::uint32_t b = 0; // second child for Or/And
    };

    static BoolCircuit input(std::size_t arity, std::size_t index);
    static BoolCircuit lor(const BoolCircuit &lhs, const BoolCircuit &rhs);
    static BoolCircuit land(const BoolCircuit &lhs, const BoolCircuit &rhs);
    static BoolCircuit lnot(const BoolCircuit &operand);

    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
    [[nodiscard]] const std::vector<Node> &nodes() const noexcept { return nodes_; }

    /// Prefix S-expression, e.g. "(or (not x0) (and x0 x1))".
    [[nodiscard]] std::string str() const;

    /// Widens the input space; existing inputs keep their indices.
    [[nodiscard]] BoolCircuit with_arity(std::size_t arity) const;

  private:
    BoolCircuit(std::size_t arity, std::vector<Node> nodes)
        : arity_(arity), nodes_(std::move(nodes)) {}
    static BoolCircuit binary(Op op, const BoolCircuit &lhs, const BoolCircuit &rhs);

    std::size_t arity_;
    std::vector<Node> nodes_;
};

/// Parses the S-expression format. Inputs are named x<i>; the arity is
/// `arity` when given (and must cover every input) or max index + 1.
BoolCircuit parse_circuit(std::string_view text,
                          std::optional<std::size_t> arity = std::nullopt);

/// Throws ArityMismatch when x.length() != c.arity().
bool eval_circuit(const BoolCircuit &c, const BitString &x);

struct EqualityResult {
    bool equal = true;
    /// Smallest input on which the functions differ.
    std::optional<BitString> witness;
};

/// Exhaustive comparison over all 2^N inputs. Throws ArityMismatch and
/// SizeCapExceeded (N > kMaxExhaustiveInputs).
EqualityResult equal_functions(const BoolCircuit &f, const BoolCircuit &g);

/// Multi-output functions compared componentwise; every component must
/// share one arity and both sides must have the same number of outputs.
EqualityResult equal_functions(std::span<const BoolCircuit> f,
                               std::span<const BoolCircuit> g);

} // namespace qclogic::classical
