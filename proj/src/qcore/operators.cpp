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

#include "qclogic/qcore/operators.hpp"

#include <algorithm>
#include <cmath>

namespace qclogic::qcore {

namespace {

double self_adjoint_defect(const ComplexMatrix &m) {
    return (m.eigen() - m.eigen().adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix &m) {
    const auto n = m.eigen().rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    const double left = (m.eigen() * m.eigen().adjoint() - id).cwiseAbs().maxCoeff();
    const double right = (m.eigen().adjoint() * m.eigen() - id).cwiseAbs().maxCoeff();
    return std::max(left, right);
}

Ket normalized(const Ket &v) {
    const double norm = v.norm();
    if (!(norm > 0.0)) {
        throw ValidationFailure("nonzero_ket", norm);
    }
    return v / norm;
}

} // namespace

std::optional<Violation> find_violation(const ComplexMatrix &m, OperatorKind kind,
                                        double tolerance) {
    if (tolerance < 0.0) {
        fail(ErrorKind::InvalidArgument, "tolerance must be non-negative");
    }
    switch (kind) {
    case OperatorKind::Density: {
        if (const double d = self_adjoint_defect(m); d > tolerance) {
            return Violation{"self_adjoint", d};
        }
        if (const double d = std::abs(trace(m) - 1.0); d > tolerance) {
            return Violation{"trace", d};
        }
        const double lowest = hermitian_spectrum(m).values.minCoeff();
        if (lowest < -tolerance) {
            return Violation{"positive", -lowest};
        }
        return std::nullopt;
    }
    case OperatorKind::Projector: {
        if (const double d = self_adjoint_defect(m); d > tolerance) {
            return Violation{"self_adjoint", d};
        }
        const double d = (m.eigen() * m.eigen() - m.eigen()).cwiseAbs().maxCoeff();
        if (d > tolerance) {
            return Violation{"idempotent", d};
        }
        return std::nullopt;
    }
    case OperatorKind::Unitary: {
        if (const double d = unitarity_defect(m); d > tolerance) {
            return Violation{"unitary", d};
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

// ---- DensityOperator ----

DensityOperator DensityOperator::validate(ComplexMatrix m, double tolerance) {
    if (auto v = find_violation(m, OperatorKind::Density, tolerance)) {
        throw ValidationFailure(v->invariant, v->magnitude);
    }
    return DensityOperator(std::move(m), tolerance);
}

DensityOperator DensityOperator::pure(const Ket &psi, double tolerance) {
    const Ket v = normalized(psi);
    return validate(ComplexMatrix::outer(v, v), tolerance);
}

DensityOperator DensityOperator::basis_state(std::size_t dim, std::size_t index) {
    return pure(basis_ket(dim, index));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return validate(ComplexMatrix(Eigen::MatrixXcd::Identity(n, n) /
                                  static_cast<double>(dim)));
}

// ---- Projector ----

Projector Projector::validate(ComplexMatrix m, double tolerance) {
    if (auto v = find_violation(m, OperatorKind::Projector, tolerance)) {
        throw ValidationFailure(v->invariant, v->magnitude);
    }
    return Projector(std::move(m), tolerance);
}

Projector Projector::zero(std::size_t dim) {
    return Projector(ComplexMatrix::zero(dim), kDefaultTolerance);
}

Projector Projector::identity(std::size_t dim) {
    return Projector(ComplexMatrix::identity(dim), kDefaultTolerance);
}

Projector Projector::onto(const Ket &v, double tolerance) {
    const Ket u = normalized(v);
    return validate(ComplexMatrix::outer(u, u), tolerance);
}

Projector Projector::basis(std::size_t dim, std::size_t index) {
    return onto(basis_ket(dim, index));
}

Projector Projector::complement() const {
    return Projector(ComplexMatrix::identity(dim()) - m_, tolerance_);
}

std::size_t Projector::rank() const {
    return static_cast<std::size_t>(std::llround(trace(m_).real()));
}

// ---- UnitaryGate ----

UnitaryGate UnitaryGate::validate(ComplexMatrix m, double tolerance) {
    if (auto v = find_violation(m, OperatorKind::Unitary, tolerance)) {
        throw ValidationFailure(v->invariant, v->magnitude);
    }
    return UnitaryGate(std::move(m), tolerance);
}

UnitaryGate UnitaryGate::identity(std::size_t dim) {
    return UnitaryGate(ComplexMatrix::identity(dim), kDefaultTolerance);
}

UnitaryGate UnitaryGate::adjoint() const {
    return UnitaryGate(m_.adjoint(), tolerance_);
}

UnitaryGate operator*(const UnitaryGate &a, const UnitaryGate &b) {
    return UnitaryGate(a.m_ * b.m_, std::max(a.tolerance_, b.tolerance_));
}

// ---- free operations ----

ValidatedOperator validate(const ComplexMatrix &m, OperatorKind kind,
                           double tolerance) {
    switch (kind) {
    case OperatorKind::Density: return DensityOperator::validate(m, tolerance);
    case OperatorKind::Projector: return Projector::validate(m, tolerance);
    case OperatorKind::Unitary: return UnitaryGate::validate(m, tolerance);
    }
    fail(ErrorKind::InvalidArgument, "unknown operator kind");
}

DensityOperator conjugate(const UnitaryGate &u, const DensityOperator &rho) {
    require_same_dim(u.matrix(), rho.matrix(), "conjugate");
    const Eigen::MatrixXcd &U = u.matrix().eigen();
    return DensityOperator::validate(
        ComplexMatrix(U * rho.matrix().eigen() * U.adjoint()),
        std::max(rho.tolerance(), u.tolerance()));
}

double born(const DensityOperator &sigma, const Projector &p) {
    require_same_dim(sigma.matrix(), p.matrix(), "born");
    // Tr(sigma P) = sum_ij sigma_ij P_ji
    const Complex t = sigma.matrix().eigen().cwiseProduct(
                                               p.matrix().eigen().transpose())
                          .sum();
    const double tol = std::max(sigma.tolerance(), p.tolerance());
    if (std::abs(t.imag()) > tol) {
        fail(ErrorKind::NonRealTrace,
             "imaginary residue " + std::to_string(t.imag()) +
                 " exceeds tolerance");
    }
    return std::clamp(t.real(), 0.0, 1.0);
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    return DensityOperator::validate(tensor(a.matrix(), b.matrix()),
                                     std::max(a.tolerance(), b.tolerance()));
}

Projector tensor(const Projector &a, const Projector &b) {
    return Projector::validate(tensor(a.matrix(), b.matrix()),
                               std::max(a.tolerance(), b.tolerance()));
}

UnitaryGate tensor(const UnitaryGate &a, const UnitaryGate &b) {
    return UnitaryGate::validate(tensor(a.matrix(), b.matrix()),
                                 std::max(a.tolerance(), b.tolerance()));
}

} // namespace qclogic::qcore
