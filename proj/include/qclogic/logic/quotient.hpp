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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qclogic/gates/gates.hpp"
#include "qclogic/logic/relations.hpp"

namespace qclogic::logic {

/// Decimal digits kept when keying words into classes.
inline constexpr int kQuotientKeyDigits = 9;

struct QuotientPartition {
    Relation relation;
    std::vector<std::vector<gates::GateWord>> classes;
    /// Positions of each class's words in the input list.
    std::vector<std::vector<std::size_t>> members;
    std::vector<std::string> canonical_keys;
};

/**
 * Partitions words under equiv_rho (key: U rho U^dagger rounded entrywise)
 * or equiv_rho_P (key: the rounded truth value). Classes appear in order of
 * first occurrence. A word whose key misses every bucket is re-checked
 * pairwise against classes with neighbouring keys before opening a new one.
 *
 * Throws InvalidArgument for other relations or a missing event,
 * DimensionMismatch when widths disagree with the state.
 */
QuotientPartition quotient(std::span<const gates::GateWord> words, Relation relation,
                           const DensityOperator &rho, const std::optional<Projector> &p,
                           double tol = kDefaultTolerance);

} // namespace qclogic::logic
