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

#include "support/random.hpp"

#include <Eigen/QR>

namespace qclogic::testing {

namespace {

Eigen::MatrixXcd gaussian(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = {n(rng), n(rng)};
    return g;
}

Eigen::MatrixXcd haar(std::size_t dim, Rng &rng) {
    const auto d = static_cast<Eigen::Index>(dim);
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian(d, d, rng));
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; ++i) {
        const auto z = r(i, i);
        if (std::abs(z) > 0) q.col(i) *= z / std::abs(z);
    }
    return q;
}

} // namespace

qcore::Ket random_ket(std::size_t dim, Rng &rng) {
    Eigen::VectorXcd v = gaussian(static_cast<Eigen::Index>(dim), 1, rng).col(0);
    return v / v.norm();
}

qcore::UnitaryGate random_unitary(std::size_t dim, Rng &rng) {
    return qcore::UnitaryGate::validate(qcore::ComplexMatrix(haar(dim, rng)));
}

qcore::DensityOperator random_density(std::size_t dim, Rng &rng, std::size_t rank) {
    const auto d = static_cast<Eigen::Index>(dim);
    const auto k = static_cast<Eigen::Index>(rank == 0 ? dim : rank);
    const Eigen::MatrixXcd g = gaussian(d, k, rng);
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return qcore::DensityOperator::validate(qcore::ComplexMatrix(std::move(rho)));
}

qcore::Projector random_projector(std::size_t dim, std::size_t rank, Rng &rng) {
    const Eigen::MatrixXcd q = haar(dim, rng);
    const auto k = static_cast<Eigen::Index>(rank);
    Eigen::MatrixXcd p = q.leftCols(k) * q.leftCols(k).adjoint();
    return qcore::Projector::validate(qcore::ComplexMatrix(std::move(p)));
}

std::vector<qcore::Projector> random_orthogonal_family(std::size_t dim,
                                                       const std::vector<std::size_t> &ranks,
                                                       Rng &rng) {
    const Eigen::MatrixXcd q = haar(dim, rng);
    std::vector<qcore::Projector> out;
    Eigen::Index start = 0;
    for (const auto rank : ranks) {
        const auto k = static_cast<Eigen::Index>(rank);
        const Eigen::MatrixXcd cols = q.middleCols(start, k);
        out.push_back(qcore::Projector::validate(qcore::ComplexMatrix(cols * cols.adjoint())));
        start += k;
    }
    return out;
}

} // namespace qclogic::testing
