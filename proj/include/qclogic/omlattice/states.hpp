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
#include <vector>

#include "qclogic/omlattice/lattice.hpp"

namespace qclogic::omlattice {

/// Table states come from exact data (point masses, JSON tables); Numeric
/// states carry floating-point rounding (Gleason states and their images).
enum class StateOrigin { Table, Numeric };

/// Zero threshold used by is_superposition when any state is Numeric.
inline constexpr double kNumericZeroThreshold = 1e-9;

/**
 * A probability assignment on lattice elements: 0 at the bottom, 1 at the
 * top, values in [0, 1], and additive on orthogonal pairs
 * (v(a v b) = v(a) + v(b) whenever a <= b'), which by induction gives
 * additivity on every finite orthogonal family.
 */
class LatticeState {
  public:
    /// Throws ValidationFailure ("size", "range", "zero", "one",
    /// "additivity").
    static LatticeState create(LatticePtr lattice, std::vector<double> values,
                               StateOrigin origin = StateOrigin::Table,
                               double tolerance = kDefaultTolerance);

    [[nodiscard]] const LatticePtr &lattice() const noexcept { return lattice_; }
    [[nodiscard]] double value(std::size_t element) const;
    [[nodiscard]] const std::vector<double> &values() const noexcept { return values_; }
    [[nodiscard]] StateOrigin origin() const noexcept { return origin_; }
    [[nodiscard]] double tolerance() const noexcept { return tolerance_; }

  private:
    LatticeState(LatticePtr l, std::vector<double> v, StateOrigin o, double tol)
        : lattice_(std::move(l)), values_(std::move(v)), origin_(o), tolerance_(tol) {}

    LatticePtr lattice_;
    std::vector<double> values_;
    StateOrigin origin_;
    double tolerance_;
};

/// v(X) = 1 when atom <= X, else 0. Validated like any other state, so it
/// is rejected on lattices where the atom does not carry a dispersion-free
/// state (e.g. the atoms of MO2).
LatticeState point_mass(const LatticePtr &lattice, std::size_t atom);

/**
 * An order automorphism preserving 0, 1, meets, joins and ortho.
 * Pairwise meet/join preservation covers every finite family by induction.
 */
class LatticeAutomorphism {
  public:
    /// Throws ValidationFailure ("bijection", "bounds", "meet", "join",
    /// "ortho").
    static LatticeAutomorphism create(LatticePtr lattice, std::vector<std::size_t> map);
    static LatticeAutomorphism identity(const LatticePtr &lattice);

    [[nodiscard]] const LatticePtr &lattice() const noexcept { return lattice_; }
    [[nodiscard]] std::size_t operator()(std::size_t element) const;
    [[nodiscard]] const std::vector<std::size_t> &map() const noexcept { return map_; }

  private:
    LatticeAutomorphism(LatticePtr l, std::vector<std::size_t> m)
        : lattice_(std::move(l)), map_(std::move(m)) {}

    LatticePtr lattice_;
    std::vector<std::size_t> map_;
};

/**
 * On a powerset lattice, the automorphism X -> f^{-1}(X) induced by a
 * bijection f of the points. Pushing a point mass at x forward along it
 * gives the point mass at f(x). Throws InvalidArgument unless f is a
 * permutation of the points.
 */
LatticeAutomorphism point_automorphism(const LatticePtr &lattice,
                                       std::span<const std::size_t> f);

/// U(v)(X) = v(U(X)). Throws LatticeMismatch.
LatticeState pushforward(const LatticeAutomorphism &u, const LatticeState &nu);
/// Pushes forward along each automorphism in time order (word[0] first).
LatticeState pushforward(std::span<const LatticeAutomorphism> word, const LatticeState &nu);

struct SuperpositionResult {
    bool is_superposition = true;
    /// First element annihilated by every state in D but not by nu.
    std::optional<std::size_t> violation;
    double threshold = 0.0;
};

/**
 * Tests: for every X, (mu(X) = 0 for all mu in D) implies nu(X) = 0.
 * "= 0" means <= threshold; the default threshold is 0 when every state is
 * Table-backed and kNumericZeroThreshold otherwise. Throws LatticeMismatch.
 */
SuperpositionResult is_superposition(const LatticeState &nu, std::span<const LatticeState> d,
                                     std::optional<double> threshold = std::nullopt);

} // namespace qclogic::omlattice
