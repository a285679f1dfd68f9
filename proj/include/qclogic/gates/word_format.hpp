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

#include "qclogic/gates/gates.hpp"

namespace qclogic::gates {

/**
 * Parses a gate word such as
 *
 *     width=2; H[0]; CNOT[0,1]; R(1.5708)[1]
 *
 * Statements are separated by ';' or newlines. The optional width statement
 * fixes the register; otherwise it is one more than the largest wire used.
 * A gate without brackets sits on wires 0..k-1 (QFT: the whole register).
 * The empty string is the empty word on one wire. Throws ParseError,
 * UnknownGate or InvalidWire.
 */
GateWord parse_word(std::string_view text);

std::string format_spec(const GateSpec &spec);
/// Inverse of parse_word; always includes the width statement.
std::string format_word(const GateWord &word);

} // namespace qclogic::gates
