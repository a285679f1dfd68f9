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

#include "qclogic/qcore/matrix.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qclogic/error.hpp"

namespace qclogic::qcore {

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw ValidationFailure("square", static_cast<double>(m_.rows()));
    }
    for (Eigen::Index i = 0; i < m_.size(); ++i) {
        const Complex z = m_.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationFailure("finite", static_cast<double>(i));
        }
    }
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = diag[static_cast<std::size_t>(i)];
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::from_row_major(std::size_t dim,
                                            std::span<const Complex> entries) {
    if (entries.size() != dim * dim) {
        fail(ErrorKind::DimensionMismatch,
             "expected " + std::to_string(dim * dim) + " entries, got " +
                 std::to_string(entries.size()));
    }
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = entries[static_cast<std::size_t>(r * n + c)];
        }
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<Complex> flat;
    for (const auto &row : rows) {
        if (row.size() != rows.size()) {
            fail(ErrorKind::DimensionMismatch, "matrix rows must be square");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_row_major(rows.size(), flat);
}

ComplexMatrix ComplexMatrix::outer(const Ket &v, const Ket &w) {
    if (v.size() != w.size()) {
        fail(ErrorKind::DimensionMismatch, "outer product of unequal kets");
    }
    return ComplexMatrix(v * w.adjoint());
}

std::vector<Complex> ComplexMatrix::row_major() const {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(m_.size()));
    for (Eigen::Index r = 0; r < m_.rows(); ++r) {
        for (Eigen::Index c = 0; c < m_.cols(); ++c) {
            out.push_back(m_(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    return ComplexMatrix(m_.adjoint());
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    return ComplexMatrix((m_ + m_.adjoint()) * 0.5);
}

double ComplexMatrix::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b,
                      const char *context) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::DimensionMismatch,
             std::string(context) + ": dim " + std::to_string(a.dim()) +
                 " vs " + std::to_string(b.dim()));
    }
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "product");
    return ComplexMatrix(a.m_ * b.m_);
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "sum");
    return ComplexMatrix(a.m_ + b.m_);
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "difference");
    return ComplexMatrix(a.m_ - b.m_);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    return ComplexMatrix(s * a.m_);
}

double distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "distance");
    return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                  double tolerance) {
    return a.dim() == b.dim() && distance(a, b) <= tolerance;
}

Complex trace(const ComplexMatrix &m) { return m.eigen().trace(); }

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Eigen::Index na = a.eigen().rows();
    const Eigen::Index nb = b.eigen().rows();
    Eigen::MatrixXcd out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
        }
    }
    return ComplexMatrix(std::move(out));
}

Ket basis_ket(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        fail(ErrorKind::IndexOutOfRange,
             "basis index " + std::to_string(index) + " >= dim " +
                 std::to_string(dim));
    }
    Ket v = Ket::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

HermitianSpectrum hermitian_spectrum(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m.hermitian_part().eigen());
    return {solver.eigenvalues(), solver.eigenvectors()};
}

} // namespace qclogic::qcore
