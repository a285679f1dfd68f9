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

#include "qclogic/qcore/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace qclogic::qcore {

namespace {

constexpr double kPivotThreshold = 1e-9;
constexpr double kSnap = 1e-12;

Complex snap(Complex z) {
    double re = std::abs(z.real()) < kSnap ? 0.0 : z.real();
    double im = std::abs(z.imag()) < kSnap ? 0.0 : z.imag();
    return {re, im};
}

// Row-major vectorization, matching the canonical entry order.
Eigen::VectorXcd vec(const ComplexMatrix &m) {
    const auto n = static_cast<Eigen::Index>(m.dim());
    Eigen::VectorXcd v(n * n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            v(r * n + c) = m.eigen()(r, c);
        }
    }
    return v;
}

ComplexMatrix unvec(const Eigen::VectorXcd &v, std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = snap(v(r * n + c));
        }
    }
    return ComplexMatrix(std::move(m));
}

// Gauss-Jordan reduction of the rows of `rows` (k x n). Returns the nonzero
// rows of the reduced row-echelon form.
Eigen::MatrixXcd reduced_row_echelon(Eigen::MatrixXcd rows) {
    const Eigen::Index k = rows.rows();
    const Eigen::Index n = rows.cols();
    Eigen::Index lead = 0;
    for (Eigen::Index col = 0; col < n && lead < k; ++col) {
        Eigen::Index pivot = lead;
        double best = std::abs(rows(lead, col));
        for (Eigen::Index r = lead + 1; r < k; ++r) {
            if (std::abs(rows(r, col)) > best) {
                best = std::abs(rows(r, col));
                pivot = r;
            }
        }
        if (best < kPivotThreshold) {
            continue;
        }
        rows.row(lead).swap(rows.row(pivot));
        rows.row(lead) /= rows(lead, col);
        for (Eigen::Index r = 0; r < k; ++r) {
            if (r != lead) {
                rows.row(r) -= rows(r, col) * rows.row(lead);
            }
        }
        ++lead;
    }
    return rows.topRows(lead);
}

Eigen::MatrixXcd orthonormal_columns(const std::vector<ComplexMatrix> &basis,
                                     std::size_t dim) {
    const auto n2 = static_cast<Eigen::Index>(dim * dim);
    Eigen::MatrixXcd cols(n2, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        cols.col(static_cast<Eigen::Index>(i)) = vec(basis[i]);
    }
    if (cols.cols() == 0) {
        return cols;
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(cols);
    const Eigen::MatrixXcd q = qr.householderQ();
    return q.leftCols(cols.cols());
}

} // namespace

OperatorAlgebraBasis::OperatorAlgebraBasis(std::size_t dim,
                                           std::vector<ComplexMatrix> basis)
    : dim_(dim), basis_(std::move(basis)) {
    for (const auto &b : basis_) {
        if (b.dim() != dim_) {
            fail(ErrorKind::DimensionMismatch, "algebra basis element has wrong dim");
        }
    }
    const auto n2 = static_cast<Eigen::Index>(dim_ * dim_);
    Eigen::MatrixXcd cols(n2, static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        cols.col(static_cast<Eigen::Index>(i)) = vec(basis_[i]);
    }
    if (!basis_.empty()) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(cols);
        qr.setThreshold(1e-10);
        if (static_cast<std::size_t>(qr.rank()) != basis_.size()) {
            throw ValidationFailure(
                "linear_independence",
                static_cast<double>(basis_.size() - static_cast<std::size_t>(qr.rank())));
        }
    }
    orthonormal_ = orthonormal_columns(basis_, dim_);
    if (!contains(ComplexMatrix::identity(dim_))) {
        throw ValidationFailure("unital", 1.0);
    }
}

bool OperatorAlgebraBasis::contains(const ComplexMatrix &m, double tolerance) const {
    if (m.dim() != dim_) {
        return false;
    }
    const Eigen::VectorXcd v = vec(m);
    if (orthonormal_.cols() == 0) {
        return v.cwiseAbs().maxCoeff() <= tolerance;
    }
    const Eigen::VectorXcd residual =
        v - orthonormal_ * (orthonormal_.adjoint() * v);
    return residual.cwiseAbs().maxCoeff() <= tolerance;
}

bool OperatorAlgebraBasis::is_subspace_of(const OperatorAlgebraBasis &other,
                                          double tolerance) const {
    return std::all_of(basis_.begin(), basis_.end(), [&](const ComplexMatrix &b) {
        return other.contains(b, tolerance);
    });
}

bool OperatorAlgebraBasis::is_abelian(double tolerance) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = i + 1; j < basis_.size(); ++j) {
            const auto &a = basis_[i].eigen();
            const auto &b = basis_[j].eigen();
            if ((a * b - b * a).cwiseAbs().maxCoeff() > tolerance) {
                return false;
            }
        }
    }
    return true;
}

OperatorAlgebraBasis commutant(std::span<const ComplexMatrix> s, std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    const Eigen::Index n2 = n * n;
    for (const auto &y : s) {
        if (y.dim() != dim) {
            fail(ErrorKind::DimensionMismatch,
                 "commutant generator has dim " + std::to_string(y.dim()) +
                     ", expected " + std::to_string(dim));
        }
    }

    // The commutator map X -> XY - YX in row-major coordinates:
    // (XY)_{ij} = sum_k X_{ik} Y_{kj},  (YX)_{ij} = sum_k Y_{ik} X_{kj}.
    // Blocks are folded into a running triangular factor so memory stays
    // at n^2 x n^2 regardless of |s|.
    Eigen::MatrixXcd r_factor(0, n2);
    for (const auto &y : s) {
        const Eigen::MatrixXcd &Y = y.eigen();
        Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n2, n2);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                const Eigen::Index row = i * n + j;
                for (Eigen::Index k = 0; k < n; ++k) {
                    block(row, i * n + k) += Y(k, j);
                    block(row, k * n + j) -= Y(i, k);
                }
            }
        }
        Eigen::MatrixXcd stacked(r_factor.rows() + n2, n2);
        stacked << r_factor, block;
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stacked);
        const Eigen::Index keep = std::min(stacked.rows(), n2);
        r_factor = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
    }

    std::vector<ComplexMatrix> basis;
    if (r_factor.rows() == 0) {
        for (Eigen::Index i = 0; i < n2; ++i) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n2);
            e(i) = 1.0;
            basis.push_back(unvec(e, dim));
        }
        return OperatorAlgebraBasis(dim, std::move(basis));
    }

    Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(n2, n2);
    padded.topRows(r_factor.rows()) = r_factor;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(padded, Eigen::ComputeFullV);
    const Eigen::VectorXd &sv = svd.singularValues();
    const double threshold = 1e-8 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    std::vector<Eigen::Index> null_cols;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) <= threshold) {
            null_cols.push_back(i);
        }
    }
    Eigen::MatrixXcd null_rows(static_cast<Eigen::Index>(null_cols.size()), n2);
    for (std::size_t i = 0; i < null_cols.size(); ++i) {
        null_rows.row(static_cast<Eigen::Index>(i)) =
            svd.matrixV().col(null_cols[i]).transpose();
    }
    const Eigen::MatrixXcd reduced = reduced_row_echelon(null_rows);
    for (Eigen::Index i = 0; i < reduced.rows(); ++i) {
        basis.push_back(unvec(reduced.row(i).transpose(), dim));
    }
    return OperatorAlgebraBasis(dim, std::move(basis));
}

bool canonical_less(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        return a.dim() < b.dim();
    }
    auto key = [](double x) { return std::llround(x * 1e12); };
    const auto &ea = a.eigen();
    const auto &eb = b.eigen();
    for (Eigen::Index r = 0; r < ea.rows(); ++r) {
        for (Eigen::Index c = 0; c < ea.cols(); ++c) {
            const auto ar = key(ea(r, c).real());
            const auto br = key(eb(r, c).real());
            if (ar != br) {
                return ar < br;
            }
            const auto ai = key(ea(r, c).imag());
            const auto bi = key(eb(r, c).imag());
            if (ai != bi) {
                return ai < bi;
            }
        }
    }
    return false;
}

namespace {

void require_orthonormal_family(std::span<const Projector> family, double tol) {
    if (family.empty()) {
        fail(ErrorKind::NotOrthonormalFamily, "empty projector family");
    }
    const std::size_t dim = family.front().dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto &p = family[i];
        if (p.dim() != dim) {
            fail(ErrorKind::NotOrthonormalFamily, "projectors differ in dimension");
        }
        if (std::abs(trace(p.matrix()) - 1.0) > tol) {
            fail(ErrorKind::NotOrthonormalFamily,
                 "projector " + std::to_string(i) + " is not rank one");
        }
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const double d =
                (p.matrix().eigen() * family[j].matrix().eigen()).cwiseAbs().maxCoeff();
            if (d > tol) {
                fail(ErrorKind::NotOrthonormalFamily,
                     "projectors " + std::to_string(i) + " and " + std::to_string(j) +
                         " are not orthogonal");
            }
        }
        sum += p.matrix().eigen();
    }
    const auto n = static_cast<Eigen::Index>(dim);
    if ((sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > tol) {
        fail(ErrorKind::NotOrthonormalFamily, "projectors do not sum to the identity");
    }
}

// Spectral projectors of a generic self-adjoint element of an abelian
// algebra are exactly its minimal projections.
std::vector<Eigen::MatrixXcd> minimal_projections(const OperatorAlgebraBasis &algebra) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const auto n = static_cast<Eigen::Index>(algebra.dim());
    for (int attempt = 0; attempt < 8; ++attempt) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
        for (const auto &b : algebra.basis()) {
            const Eigen::MatrixXcd re = (b.eigen() + b.eigen().adjoint()) * 0.5;
            const Eigen::MatrixXcd im =
                (b.eigen() - b.eigen().adjoint()) * Complex(0.0, -0.5);
            a += coeff(rng) * re + coeff(rng) * im;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
        const auto &values = solver.eigenvalues();
        const auto &vectors = solver.eigenvectors();
        std::vector<Eigen::MatrixXcd> projections;
        Eigen::Index start = 0;
        for (Eigen::Index i = 1; i <= n; ++i) {
            if (i == n || values(i) - values(i - 1) > 1e-7) {
                const Eigen::MatrixXcd v = vectors.middleCols(start, i - start);
                projections.emplace_back(v * v.adjoint());
                start = i;
            }
        }
        if (projections.size() == algebra.size()) {
            return projections;
        }
    }
    fail(ErrorKind::NonAbelianAlgebra,
         "could not separate the minimal projections of the algebra");
}

} // namespace

std::vector<Projector> boolean_projections(std::span<const Projector> basis_projectors,
                                           double tolerance) {
    require_orthonormal_family(basis_projectors, std::max(tolerance, 1e-12));
    const std::size_t dim = basis_projectors.front().dim();

    std::vector<ComplexMatrix> generators;
    generators.reserve(basis_projectors.size());
    for (const auto &p : basis_projectors) {
        generators.push_back(p.matrix());
    }
    const OperatorAlgebraBasis first = commutant(generators, dim);
    const OperatorAlgebraBasis second = commutant(first.basis(), dim);
    if (!second.is_abelian()) {
        fail(ErrorKind::NonAbelianAlgebra, "double commutant is not abelian");
    }
    if (second.size() > kMaxBooleanAtoms) {
        fail(ErrorKind::SizeCapExceeded,
             "double commutant has " + std::to_string(second.size()) +
                 " minimal projections; cap is " + std::to_string(kMaxBooleanAtoms));
    }

    const std::vector<Eigen::MatrixXcd> atoms = minimal_projections(second);
    for (const auto &atom : atoms) {
        if (!second.contains(ComplexMatrix(atom))) {
            fail(ErrorKind::NonAbelianAlgebra,
                 "spectral projector lies outside the algebra");
        }
    }

    const auto n = static_cast<Eigen::Index>(dim);
    std::vector<Projector> out;
    const std::size_t count = std::size_t{1} << atoms.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            if (mask & (std::size_t{1} << a)) {
                sum += atoms[a];
            }
        }
        out.push_back(Projector::validate(ComplexMatrix(sum.unaryExpr(&snap)),
                                          std::max(tolerance, 1e-9)));
    }
    std::sort(out.begin(), out.end(), [](const Projector &a, const Projector &b) {
        return canonical_less(a.matrix(), b.matrix());
    });
    return out;
}

} // namespace qclogic::qcore
