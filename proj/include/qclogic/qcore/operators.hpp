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
#include <string>
#include <variant>

#include "qclogic/error.hpp"
#include "qclogic/qcore/matrix.hpp"

namespace qclogic::qcore {

/// Largest Hilbert-space dimension accepted by the default pipelines (ten
/// qubits). Callers that need more pass their own cap explicitly.
inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 10;

enum class OperatorKind { Density, Projector, Unitary };

struct Violation {
    std::string invariant;
    double magnitude = 0.0;
};

/// Returns the first violated invariant of `kind`, or nothing when `m`
/// satisfies all of them within `tolerance`.
std::optional<Violation> find_violation(const ComplexMatrix &m, OperatorKind kind,
                                        double tolerance);

/// Positive, self-adjoint, trace-one operator.
class DensityOperator {
  public:
    /// Throws ValidationFailure naming the first broken invariant.
    static DensityOperator validate(ComplexMatrix m,
                                    double tolerance = kDefaultTolerance);
    /// |psi><psi| for the normalized ket.
    static DensityOperator pure(const Ket &psi,
                                double tolerance = kDefaultTolerance);
    static DensityOperator basis_state(std::size_t dim, std::size_t index);
    static DensityOperator maximally_mixed(std::size_t dim);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] double tolerance() const noexcept { return tolerance_; }

  private:
    DensityOperator(ComplexMatrix m, double tolerance)
        : m_(std::move(m)), tolerance_(tolerance) {}
    ComplexMatrix m_;
    double tolerance_;
};

/// Orthogonal projection: self-adjoint and idempotent.
class Projector {
  public:
    static Projector validate(ComplexMatrix m, double tolerance = kDefaultTolerance);
    static Projector zero(std::size_t dim);
    static Projector identity(std::size_t dim);
    /// Rank-1 projector onto the normalized ket.
    static Projector onto(const Ket &v, double tolerance = kDefaultTolerance);
    static Projector basis(std::size_t dim, std::size_t index);

    /// 1 - P
    [[nodiscard]] Projector complement() const;

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] double tolerance() const noexcept { return tolerance_; }
    /// Real part of the trace, rounded to the nearest integer.
    [[nodiscard]] std::size_t rank() const;

  private:
    Projector(ComplexMatrix m, double tolerance)
        : m_(std::move(m)), tolerance_(tolerance) {}
    ComplexMatrix m_;
    double tolerance_;
};

/// U U^dagger = U^dagger U = 1.
class UnitaryGate {
  public:
    static UnitaryGate validate(ComplexMatrix m,
                                double tolerance = kDefaultTolerance);
    static UnitaryGate identity(std::size_t dim);

    [[nodiscard]] UnitaryGate adjoint() const;

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] double tolerance() const noexcept { return tolerance_; }

    /// Product a*b (b acts first). Not re-validated: products of unitaries
    /// are unitary, and the tolerance carried forward is the larger of the two.
    friend UnitaryGate operator*(const UnitaryGate &a, const UnitaryGate &b);

  private:
    UnitaryGate(ComplexMatrix m, double tolerance)
        : m_(std::move(m)), tolerance_(tolerance) {}
    ComplexMatrix m_;
    double tolerance_;
};

using ValidatedOperator = std::variant<DensityOperator, Projector, UnitaryGate>;

/// Refines `m` into the requested kind or throws ValidationFailure.
ValidatedOperator validate(const ComplexMatrix &m, OperatorKind kind,
                           double tolerance = kDefaultTolerance);

/// U rho U^dagger, revalidated as a density operator.
DensityOperator conjugate(const UnitaryGate &u, const DensityOperator &rho);

/// Born probability Tr(sigma P), clamped to [0, 1]. Throws NonRealTrace when
/// the imaginary residue exceeds the operands' tolerance.
double born(const DensityOperator &sigma, const Projector &p);

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);
Projector tensor(const Projector &a, const Projector &b);
UnitaryGate tensor(const UnitaryGate &a, const UnitaryGate &b);

} // namespace qclogic::qcore
