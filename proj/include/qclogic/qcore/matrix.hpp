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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qclogic::qcore {

using Complex = std::complex<double>;
using Ket = Eigen::VectorXcd;

/**
 * Dense square complex matrix.
 *
 * The substrate for states, gates and projectors. A ComplexMatrix is always
 * square with dim >= 1 and holds only finite entries; every constructor
 * enforces this. Values are immutable once built: arithmetic returns new
 * matrices.
 */
class ComplexMatrix {
  public:
    /// Wraps an Eigen matrix. Throws ValidationFailure if it is not square,
    /// empty, or holds a non-finite entry.
    explicit ComplexMatrix(Eigen::MatrixXcd m);

    static ComplexMatrix zero(std::size_t dim);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
    /// Row-major entries; entries.size() must equal dim*dim.
    static ComplexMatrix from_row_major(std::size_t dim,
                                        std::span<const Complex> entries);
    static ComplexMatrix
    from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    /// |v><w|
    static ComplexMatrix outer(const Ket &v, const Ket &w);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(m_.rows());
    }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    [[nodiscard]] const Eigen::MatrixXcd &eigen() const noexcept { return m_; }
    [[nodiscard]] std::vector<Complex> row_major() const;

    [[nodiscard]] ComplexMatrix adjoint() const;
    /// (M + M^dagger) / 2
    [[nodiscard]] ComplexMatrix hermitian_part() const;
    /// Largest absolute entry.
    [[nodiscard]] double max_abs() const;

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);

  private:
    Eigen::MatrixXcd m_;
};

/// Max-entry distance |A - B|_max. Throws DimensionMismatch.
double distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// True when the max-entry distance is within `tolerance`.
bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                  double tolerance);

/// Sum of diagonal entries.
Complex trace(const ComplexMatrix &m);

/// Kronecker product; the left operand is the leftmost tensor factor.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Computational basis vector |index> in dimension dim.
Ket basis_ket(std::size_t dim, std::size_t index);

/// Eigen-decomposition of the Hermitian part of a matrix; eigenvalues are
/// ascending.
struct HermitianSpectrum {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};
HermitianSpectrum hermitian_spectrum(const ComplexMatrix &m);

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b,
                      const char *context);

} // namespace qclogic::qcore
