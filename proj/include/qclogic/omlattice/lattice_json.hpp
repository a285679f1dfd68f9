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
#include <vector>

#include "qclogic/json_format.hpp"
#include "qclogic/omlattice/lattice.hpp"
#include "qclogic/omlattice/states.hpp"

namespace qclogic::omlattice {

/**
 * {"elements": [names], "order": {a: [elements covering a]},
 *  "ortho": {a: a'}, "zero": name, "one": name}
 *
 * On import the order lists may hold any pairs a <= b; the reflexive
 * transitive closure is taken.
 */
Json lattice_to_json(const FiniteOML &lattice);
/// Throws ParseError for malformed documents and LawViolation when the
/// order has no meets/joins (or, with enforce_laws, fails any required law).
LatticePtr lattice_from_json(const Json &j, bool enforce_laws = true);

/// {element name: value}
Json state_to_json(const LatticeState &state);
/// Every element must be listed. Throws ParseError or ValidationFailure.
LatticeState state_from_json(const LatticePtr &lattice, const Json &j);

/// "bool1".."bool4", "mo2", "diag1", "diag2".
LatticePtr builtin_lattice(const std::string &name);
std::vector<std::string> builtin_lattice_names();

/// Law battery results as a JSON array of {law, passed, required,
/// exhaustive, checked, witness?: [names]}.
Json laws_to_json(const FiniteOML &lattice, const std::vector<LawResult> &laws);

} // namespace qclogic::omlattice
