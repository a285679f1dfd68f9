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

#include "qclogic/gates/gates.hpp"
#include "qclogic/json_format.hpp"
#include "qclogic/qcore/operators.hpp"

namespace qclogic::cli {

/// True for ket labels such as "0", "+-", "|01>": characters from {0,1,+,-}
/// with optional |...> brackets.
bool is_ket_label(const std::string &text);

/// Product ket for a label, wire 0 leftmost. Throws ParseError.
qcore::Ket ket_from_label(const std::string &text);

/// A state given as a ket label, an inline matrix literal or a file holding
/// one. Throws DimensionMismatch when it does not act on `dim`.
qcore::DensityOperator read_state(const std::string &source, std::size_t dim, double tol);

/// An event given the same ways as read_state (a label denotes the rank-1
/// projector onto that ket).
qcore::Projector read_event(const std::string &source, std::size_t dim, double tol);

/// A gate word in the text format, or a file holding one.
gates::GateWord read_word(const std::string &source);

/// A JSON document given inline or as a file path.
Json read_document(const std::string &source, const std::string &what);

} // namespace qclogic::cli
