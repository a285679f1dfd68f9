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

#include <span>

#include "qclogic/classical/circuit.hpp"
#include "qclogic/qcore/operators.hpp"

namespace qclogic::logic {

/// Largest n + m handled by the reversible embedding.
inline constexpr std::size_t kMaxEmbeddingBits = 10;

/**
 * Reversible embedding |x>|y> -> |x>|y xor f(x)> of an m-output Boolean
 * function on n inputs, as a permutation unitary on n + m qubits.
 * Throws ArityMismatch when the outputs disagree on n, SizeCapExceeded
 * beyond kMaxEmbeddingBits.
 */
qcore::UnitaryGate classical_embedding(std::span<const classical::BoolCircuit> outputs);

/// Basis state |x>|y> on n + m qubits.
qcore::DensityOperator embedded_input(const classical::BitString &x,
                                      const classical::BitString &y);

/// Projector onto "qubit `wire` reads 1" in a width-qubit register.
qcore::Projector wire_event(std::size_t width, std::size_t wire);

} // namespace qclogic::logic
