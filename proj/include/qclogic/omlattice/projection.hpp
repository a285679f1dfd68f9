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
#include <string>
#include <vector>

#include "qclogic/omlattice/states.hpp"
#include "qclogic/qcore/operators.hpp"

namespace qclogic::omlattice {

inline constexpr std::size_t kDefaultClosureCap = 64;
/// Projectors closer than this (max-entry) are the same lattice element.
inline constexpr double kProjectorMergeTolerance = 1e-7;
/// Distances in (merge tol, kCollisionFactor * merge tol] are ambiguous.
inline constexpr double kCollisionFactor = 1e3;

/// A finite sublattice of the projections on C^dim, element i realized by
/// projectors[i].
struct ProjectionLattice {
    LatticePtr lattice;
    std::vector<qcore::Projector> projectors;
    std::size_t dim = 0;
};

/**
 * Closes `generators` (plus 0 and 1) under meet (intersection of ranges),
 * join (closed span of ranges) and ortho (1 - P). Elements are ordered 0,
 * the generators, derived elements in discovery order, then 1.
 *
 * Throws ClosureCapExceeded when the closure outgrows `cap`,
 * ToleranceCollision when two projectors are too close to separate but too
 * far to merge, DimensionMismatch for generators of the wrong size.
 */
ProjectionLattice projection_oml(std::size_t dim, std::span<const qcore::Projector> generators,
                                 std::vector<std::string> names = {},
                                 std::size_t cap = kDefaultClosureCap);

/// Projector onto the intersection of the ranges of p and q.
qcore::Projector projector_meet(const qcore::Projector &p, const qcore::Projector &q);
/// Projector onto the span of the ranges of p and q.
qcore::Projector projector_join(const qcore::Projector &p, const qcore::Projector &q);

/// v(P) = Tr(rho P) on every element. Throws DimensionMismatch.
LatticeState gleason_state(const qcore::DensityOperator &rho, const ProjectionLattice &pl);

/**
 * The automorphism X -> U^dagger X U, so that pushing gleason_state(rho)
 * forward gives gleason_state(U rho U^dagger). Throws
 * NotClosedUnderConjugation when some element has no image in the lattice.
 */
LatticeAutomorphism unitary_automorphism(const qcore::UnitaryGate &u,
                                         const ProjectionLattice &pl);

/// Index of the element matching p, if any.
std::optional<std::size_t> find_projector(const ProjectionLattice &pl, const qcore::Projector &p);

/// {0, |0>, |1>, |+>, |->, 1} on C^2.
ProjectionLattice mo2_lattice();
/// The Boolean algebra generated by the computational basis of `width`
/// qubits (2^(2^width) elements; width <= 2).
ProjectionLattice diagonal_lattice(std::size_t width);

} // namespace qclogic::omlattice
