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
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qclogic/error.hpp"

namespace qclogic::omlattice {

/// Largest lattice the dense-table backend will hold.
inline constexpr std::size_t kMaxTableElements = 1024;
/// Largest N accepted by boolean_oml (2^(2^4) = 65536 elements).
inline constexpr std::size_t kMaxBooleanPoints = 4;
/// Tuple counts up to which the law battery is exhaustive; above them it
/// checks kLawSamples seeded random tuples instead.
inline constexpr std::size_t kExhaustivePairElements = 4096;
inline constexpr std::size_t kExhaustiveTripleElements = 256;
inline constexpr std::size_t kLawSamples = std::size_t{1} << 20;

class FiniteOML;
using LatticePtr = std::shared_ptr<const FiniteOML>;

/**
 * A finite orthomodular lattice.
 *
 * Elements are indices 0..size()-1. Two backends exist: dense operation
 * tables (any lattice up to kMaxTableElements), and a bitmask powerset
 * backend for boolean_oml where element i is the subset of points whose
 * bits are set in i. Lattices are shared immutable objects; two lattices
 * are the same lattice only if they are the same object.
 *
 * Table-backed lattices run the law battery on construction and throw
 * LawViolation naming the first failed law and a witness tuple.
 */
class FiniteOML {
  public:
    /// Builds from operation tables (row-major n x n meet and join). With
    /// enforce_laws false the battery is skipped, so a caller can inspect a
    /// broken structure with check_laws().
    static LatticePtr from_tables(std::vector<std::string> names,
                                  std::vector<std::uint32_t> meet,
                                  std::vector<std::uint32_t> join,
                                  std::vector<std::uint32_t> ortho, bool enforce_laws = true);
    /// Builds from an order relation (row-major n x n, leq[a*n+b] means
    /// a <= b); meet and join are computed as glb and lub, which must exist.
    static LatticePtr from_order(std::vector<std::string> names, const std::vector<bool> &leq,
                                 std::vector<std::uint32_t> ortho, bool enforce_laws = true);
    /// Powerset of {0,1}^n with intersection, union and complement.
    static LatticePtr powerset(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t zero() const noexcept { return zero_; }
    [[nodiscard]] std::size_t one() const noexcept { return one_; }
    [[nodiscard]] bool is_powerset() const noexcept { return powerset_points_ > 0; }
    /// Number of points for the powerset backend, 0 otherwise.
    [[nodiscard]] std::size_t powerset_points() const noexcept { return powerset_points_; }

    [[nodiscard]] std::size_t meet(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::size_t join(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::size_t ortho(std::size_t a) const;
    [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return meet(a, b) == a; }
    /// a <= ortho(b)
    [[nodiscard]] bool orthogonal(std::size_t a, std::size_t b) const {
        return leq(a, ortho(b));
    }

    [[nodiscard]] std::string name(std::size_t a) const;
    /// Throws IndexOutOfRange for unknown names.
    [[nodiscard]] std::size_t index_of(const std::string &name) const;
    /// Elements covering zero, ascending.
    [[nodiscard]] std::vector<std::size_t> atoms() const;
    /// Throws IndexOutOfRange.
    void check_index(std::size_t a) const;

  private:
    FiniteOML() = default;

    std::size_t size_ = 0;
    std::size_t zero_ = 0;
    std::size_t one_ = 0;
    std::size_t powerset_points_ = 0;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> lookup_;
    std::vector<std::uint32_t> meet_;
    std::vector<std::uint32_t> join_;
    std::vector<std::uint32_t> ortho_;
};

/// boolean_oml(n): the powerset lattice of {0,1}^n. Throws SizeCapExceeded
/// for n > kMaxBooleanPoints, InvalidArgument for n == 0.
LatticePtr boolean_oml(std::size_t n);

struct LawResult {
    std::string law;
    bool passed = true;
    /// Element indices of the first failing tuple.
    std::vector<std::size_t> witness;
    /// Required of every orthomodular lattice (distributivity is not).
    bool required = true;
    /// False when the tuple space was sampled.
    bool exhaustive = true;
    std::size_t checked = 0;
};

/**
 * Runs the full battery: partial_order, bounds, meet_glb, join_lub,
 * commutativity, associativity, absorption, ortho_involution,
 * ortho_order_reversing, ortho_meet_zero, ortho_join_one, orthomodular and
 * (informational) distributive.
 */
std::vector<LawResult> check_laws(const FiniteOML &lattice, std::uint64_t seed = 0x1a77);

/// Result for one named law; throws InvalidArgument for unknown names.
LawResult check_law(const FiniteOML &lattice, const std::string &law,
                    std::uint64_t seed = 0x1a77);

/// Throws LatticeMismatch unless a and b are the same lattice object.
void require_same_lattice(const LatticePtr &a, const LatticePtr &b, const char *context);

} // namespace qclogic::omlattice
