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
#include <vector>

#include "qclogic/qcore/operators.hpp"

namespace qclogic::qcore {

/**
 * A basis for a unital *-closed subalgebra of the dim x dim matrices.
 *
 * Basis elements are kept in reduced row-echelon form with respect to the
 * row-major entry order, so two computations of the same algebra produce
 * the same basis. Construction checks linear independence and that the
 * identity lies in the span.
 */
class OperatorAlgebraBasis {
  public:
    OperatorAlgebraBasis(std::size_t dim, std::vector<ComplexMatrix> basis);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return basis_.size(); }
    [[nodiscard]] const std::vector<ComplexMatrix> &basis() const noexcept {
        return basis_;
    }

    /// Whether `m` lies in the span, with residual measured in max-entry norm.
    [[nodiscard]] bool contains(const ComplexMatrix &m,
                                double tolerance = 1e-8) const;
    /// span(this) is a subspace of span(other).
    [[nodiscard]] bool is_subspace_of(const OperatorAlgebraBasis &other,
                                      double tolerance = 1e-8) const;
    /// All basis elements commute pairwise.
    [[nodiscard]] bool is_abelian(double tolerance = 1e-8) const;

  private:
    std::size_t dim_;
    std::vector<ComplexMatrix> basis_;
    Eigen::MatrixXcd orthonormal_; // dim^2 x size, orthonormal columns
};

/// {X : [X, Y] = 0 for all Y in s}. An empty set yields the full matrix
/// algebra. Throws DimensionMismatch if any element is not dim x dim.
OperatorAlgebraBasis commutant(std::span<const ComplexMatrix> s, std::size_t dim);

/// Largest algebra dimension whose projection lattice boolean_projections
/// will enumerate (2^12 projectors).
inline constexpr std::size_t kMaxBooleanAtoms = 12;

/**
 * Projections of the double commutant of a measurement basis.
 *
 * `basis_projectors` must be rank-1 projectors onto an orthonormal basis
 * (pairwise products vanish and they sum to the identity). The double
 * commutant is computed by two applications of `commutant`; its minimal
 * projections are recovered from the spectrum of a generic self-adjoint
 * element and every subset sum is returned, sorted canonically.
 *
 * Throws NotOrthonormalFamily, NonAbelianAlgebra, SizeCapExceeded.
 */
std::vector<Projector> boolean_projections(std::span<const Projector> basis_projectors,
                                           double tolerance = kDefaultTolerance);

/// Lexicographic order on entries rounded to 12 decimal digits (real part,
/// then imaginary part, row-major).
bool canonical_less(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace qclogic::qcore
