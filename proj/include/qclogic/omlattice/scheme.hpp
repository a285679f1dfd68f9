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

#include "qclogic/omlattice/states.hpp"

namespace qclogic::omlattice {

/// A lattice, a declared set of states, and generating automorphisms.
struct ComputationalScheme {
    LatticePtr lattice;
    std::vector<LatticeState> states;
    std::vector<LatticeAutomorphism> generators;
    std::size_t initial = 0;

    /// Throws LatticeMismatch or IndexOutOfRange.
    void validate() const;
};

/**
 * Comparison of two automorphism words on lattice states.
 *
 * relation is "equiv" or "leq", scope is "nu_X" (one state, one element),
 * "nu" (one state, every element) or "all" (every declared state). A failed
 * comparison names the first offending element and, for "all", the state.
 */
struct GeneralizedReport {
    std::string relation;
    std::string scope;
    bool holds = true;
    std::optional<std::size_t> element;
    std::optional<std::size_t> state_index;
    std::optional<double> lhs;
    std::optional<double> rhs;
    double deviation = 0.0;
    double tolerance = kDefaultTolerance;
};

using AutomorphismWord = std::span<const LatticeAutomorphism>;

/// mu = U(nu), mu' = V(nu); compares mu(X) with mu'(X), or on every X when
/// x is absent. Throws LatticeMismatch.
GeneralizedReport generalized_equiv(AutomorphismWord u, AutomorphismWord v,
                                    const LatticeState &nu, std::optional<std::size_t> x,
                                    double tol = kDefaultTolerance);
/// As generalized_equiv, over every state in `states`.
GeneralizedReport generalized_equiv_all(AutomorphismWord u, AutomorphismWord v,
                                        std::span<const LatticeState> states,
                                        std::optional<std::size_t> x,
                                        double tol = kDefaultTolerance);

/// mu(X) <= mu'(X) + tol.
GeneralizedReport generalized_leq(AutomorphismWord u, AutomorphismWord v,
                                  const LatticeState &nu, std::optional<std::size_t> x,
                                  double tol = kDefaultTolerance);
GeneralizedReport generalized_leq_all(AutomorphismWord u, AutomorphismWord v,
                                      std::span<const LatticeState> states,
                                      std::optional<std::size_t> x,
                                      double tol = kDefaultTolerance);

/**
 * Pushes the initial state through the generators named by `word` (time
 * order: word[0] acts first) and reads out each element of `readout`.
 * Throws IndexOutOfRange for bad generator or element indices.
 */
std::vector<double> run_protocol(const ComputationalScheme &scheme,
                                 std::span<const std::size_t> word,
                                 std::span<const std::size_t> readout);

} // namespace qclogic::omlattice
