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
#include <string_view>

#include "qclogic/qcore/operators.hpp"

namespace qclogic::logic {

using qcore::DensityOperator;
using qcore::Projector;
using qcore::UnitaryGate;

enum class Relation { EquivRhoP, EquivRho, EquivP, EquivTotal, LeqRhoP, LeqRho, LeqP };

std::string_view relation_name(Relation r) noexcept;
/// Accepts the canonical names ("equiv_rho_P", ...) and the short CLI forms
/// ("total", "rho", "P", "rho_P", "leq_rho", "leq_P", "leq_rho_P").
/// Throws InvalidArgument.
Relation relation_from_name(std::string_view name);

/// A (state, event) pair; either side may be absent but not both.
struct TruthContext {
    std::optional<DensityOperator> state;
    std::optional<Projector> event;

    /// Throws InvalidArgument when empty, DimensionMismatch when the two
    /// sides disagree.
    void check() const;
};

struct EquivalenceReport {
    Relation relation;
    bool holds = false;
    /// The two truth values, for the pointwise relations.
    std::optional<double> lhs;
    std::optional<double> rhs;
    /// Global phase with V^dagger U ~ e^{i theta} 1 (equiv_total only).
    std::optional<double> theta;
    /// U == V entrywise (equiv_total only).
    std::optional<bool> strict_equal;
    /// Set when a quantifier was sampled rather than decided exactly.
    bool approximate = false;
    /// Separating context when the relation fails.
    std::optional<TruthContext> witness;
    double tolerance = kDefaultTolerance;
    /// How far the inputs are from satisfying the relation (0 when exact).
    double deviation = 0.0;
};

/// Tr(U rho U^dagger P).
double truth_value(const UnitaryGate &u, const DensityOperator &rho, const Projector &p);

EquivalenceReport equiv_rho_P(const UnitaryGate &u, const UnitaryGate &v,
                              const DensityOperator &rho, const Projector &p,
                              double tol = kDefaultTolerance);
EquivalenceReport equiv_rho(const UnitaryGate &u, const UnitaryGate &v,
                            const DensityOperator &rho, double tol = kDefaultTolerance);
EquivalenceReport equiv_P(const UnitaryGate &u, const UnitaryGate &v, const Projector &p,
                          double tol = kDefaultTolerance);
/// Equality up to a global phase; theta and strict_equal are reported.
EquivalenceReport equiv_total(const UnitaryGate &u, const UnitaryGate &v,
                              double tol = kDefaultTolerance);

EquivalenceReport leq_rho_P(const UnitaryGate &u, const UnitaryGate &v,
                            const DensityOperator &rho, const Projector &p,
                            double tol = kDefaultTolerance);
EquivalenceReport leq_rho(const UnitaryGate &u, const UnitaryGate &v,
                          const DensityOperator &rho, double tol = kDefaultTolerance);
EquivalenceReport leq_P(const UnitaryGate &u, const UnitaryGate &v, const Projector &p,
                        double tol = kDefaultTolerance);

/// Dispatches on `r`, taking what it needs from `context`. Throws
/// InvalidArgument when a required state or event is missing.
EquivalenceReport compare(Relation r, const UnitaryGate &u, const UnitaryGate &v,
                          const TruthContext &context, double tol = kDefaultTolerance);

/**
 * The forall-P quantifier of equiv_rho checked only against the rank-1
 * projectors onto the columns of each unitary in `bases`. The report is
 * marked approximate: passing here does not imply equiv_rho.
 */
EquivalenceReport equiv_rho_sampled(const UnitaryGate &u, const UnitaryGate &v,
                                    const DensityOperator &rho,
                                    std::span<const UnitaryGate> bases,
                                    double tol = kDefaultTolerance);

struct HierarchyReport {
    EquivalenceReport total;
    EquivalenceReport rho;
    EquivalenceReport rho_P;
    std::optional<EquivalenceReport> P;
};

/// Slack allowed when a stronger relation's tolerance propagates to a
/// weaker one: 2 dim^2 tol.
double hierarchy_slack(std::size_t dim, double tol);

/**
 * Evaluates equiv_total, equiv_rho, equiv_P and equiv_rho_P and checks
 * total => rho => rho_P and total => P => rho_P.
 *
 * A weaker relation whose deviation lies within hierarchy_slack() of a
 * stronger one that holds is reported as holding; anything beyond that
 * throws HierarchyViolation (an implementation bug, not a physics outcome).
 */
HierarchyReport hierarchy_check(const UnitaryGate &u, const UnitaryGate &v,
                                const DensityOperator &rho, const Projector &p,
                                double tol = kDefaultTolerance);

} // namespace qclogic::logic
