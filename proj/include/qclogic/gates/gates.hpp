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
#include <string_view>
#include <vector>

#include "qclogic/qcore/operators.hpp"

namespace qclogic::gates {

/// Widest register the gate layer will build matrices for (2^10 = 1024).
inline constexpr std::size_t kMaxWidth = 10;

/// Default cap on the number of words enumerate_polynomials may return.
inline constexpr std::size_t kDefaultEnumerationCap = 100000;

enum class GateKind { H, T, X, Z, CNOT, R, XX, Toffoli, QFT };

std::string_view gate_name(GateKind kind) noexcept;
/// Case-insensitive; accepts CX for CNOT and CCX for TOFFOLI. Throws
/// UnknownGate.
GateKind gate_kind_from_name(std::string_view name);
/// Wire count, or 0 for QFT, which spans any non-empty wire list.
std::size_t gate_arity(GateKind kind) noexcept;
bool is_parameterized(GateKind kind) noexcept;

/**
 * One elementary gate placed on wires.
 *
 * Wire 0 is the leftmost tensor factor (most significant bit of a basis
 * index). CNOT wires are {control, target}; TOFFOLI wires are
 * {control, control, target}; QFT treats wires[0] as the most significant
 * bit of its register.
 */
struct GateSpec {
    GateKind kind;
    double param = 0.0;
    std::vector<std::size_t> wires;

    friend bool operator==(const GateSpec &, const GateSpec &) = default;
};

/// Throws InvalidWire for out-of-range, repeated or miscounted wires and
/// InvalidArgument for a non-finite parameter.
void check_spec(const GateSpec &spec, std::size_t width);

/// The gate's matrix on its own wires (2^k x 2^k).
qcore::ComplexMatrix local_matrix(const GateSpec &spec);

/// F_ab = exp(2 pi i a b / n) / sqrt(n).
qcore::ComplexMatrix qft_matrix(std::size_t n);

/// The gate embedded in a width-qubit register, identity elsewhere.
qcore::UnitaryGate elementary(const GateSpec &spec, std::size_t width);

/// A finite sequence of gates in time order (first element acts first).
class GateWord {
  public:
    explicit GateWord(std::size_t width, std::vector<GateSpec> gates = {});

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] const std::vector<GateSpec> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    [[nodiscard]] GateWord then(const GateSpec &spec) const;
    [[nodiscard]] GateWord then(const GateWord &later) const;
    /// Same gates on a wider register. Throws InvalidWire when narrowing
    /// would drop a used wire.
    [[nodiscard]] GateWord widened(std::size_t width) const;

    friend bool operator==(const GateWord &, const GateWord &) = default;

  private:
    std::size_t width_;
    std::vector<GateSpec> gates_;
};

/// U = U_n ... U_1 for the word [U_1, ..., U_n]; identity for the empty word.
qcore::UnitaryGate compose_word(const GateWord &word);

struct GateTemplate {
    GateKind kind;
    /// Finite parameter values; required for R and XX.
    std::vector<double> grid;
};

struct GeneratorSet {
    std::string label;
    std::vector<GateTemplate> members;

    /// {H, T}
    static GeneratorSet g1();
    /// {CNOT, H, R(phi)} with phi drawn from `grid`.
    static GeneratorSet g2(std::vector<double> grid);
    /// {XX(phi), R(phi)} with phi drawn from `grid`.
    static GeneratorSet g3(std::vector<double> grid);
};

/// Every placement of every template on `width` wires, in template order,
/// then grid order, then lexicographic wire order. Symmetric gates (XX, the
/// Toffoli controls) are placed once per unordered wire set.
std::vector<GateSpec> instantiate(const GeneratorSet &g, std::size_t width);

/**
 * All words of length <= max_len over the instantiated generators, ordered
 * by length and then lexicographically by instantiation index.
 *
 * Throws EnumerationCapExceeded when the word count would exceed `cap`,
 * UnboundedParameter when a parameterized template has an empty grid.
 */
std::vector<GateWord> enumerate_polynomials(const GeneratorSet &g, std::size_t width,
                                            std::size_t max_len,
                                            std::size_t cap = kDefaultEnumerationCap);

/// Tr( T (rho (x) sigma (x) |0><0|) T^dagger (1 (x) 1 (x) |1><1|) ) with T the
/// Toffoli gate. Throws DimensionMismatch unless both operands are qubits.
double toffoli_truth_value(const qcore::DensityOperator &rho,
                           const qcore::DensityOperator &sigma);

} // namespace qclogic::gates
