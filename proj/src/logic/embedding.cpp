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

#include "qclogic/logic/embedding.hpp"

#include <string>

namespace qclogic::logic {

qcore::UnitaryGate classical_embedding(std::span<const classical::BoolCircuit> outputs) {
    if (outputs.empty()) {
        fail(ErrorKind::ArityMismatch, "embedding needs at least one output");
    }
    const std::size_t n = outputs.front().arity();
    const std::size_t m = outputs.size();
    for (const auto &c : outputs) {
        if (c.arity() != n) {
            fail(ErrorKind::ArityMismatch, "outputs disagree on input count");
        }
    }
    if (n + m > kMaxEmbeddingBits) {
        fail(ErrorKind::SizeCapExceeded,
             "embedding of " + std::to_string(n + m) + " bits exceeds " +
                 std::to_string(kMaxEmbeddingBits));
    }
    const std::size_t dim = std::size_t{1} << (n + m);
    const std::size_t ys = std::size_t{1} << m;
    Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                   static_cast<Eigen::Index>(dim));
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
        const classical::BitString input(n, x);
        std::size_t fx = 0;
        for (const auto &c : outputs) {
            fx = (fx << 1) | (classical::eval_circuit(c, input) ? 1U : 0U);
        }
        for (std::size_t y = 0; y < ys; ++y) {
            perm(static_cast<Eigen::Index>(x * ys + (y ^ fx)),
                 static_cast<Eigen::Index>(x * ys + y)) = 1.0;
        }
    }
    return qcore::UnitaryGate::validate(qcore::ComplexMatrix(std::move(perm)));
}

qcore::DensityOperator embedded_input(const classical::BitString &x,
                                      const classical::BitString &y) {
    const std::size_t bits = x.length() + y.length();
    if (bits > kMaxEmbeddingBits) {
        fail(ErrorKind::SizeCapExceeded, "embedded input too wide");
    }
    const std::size_t index = (x.value() << y.length()) | y.value();
    return qcore::DensityOperator::basis_state(std::size_t{1} << bits, index);
}

qcore::Projector wire_event(std::size_t width, std::size_t wire) {
    if (wire >= width || width > kMaxEmbeddingBits) {
        fail(ErrorKind::InvalidWire, "wire " + std::to_string(wire) + " outside width " +
                                         std::to_string(width));
    }
    const std::size_t dim = std::size_t{1} << width;
    std::vector<qcore::Complex> diag(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i >> (width - 1 - wire)) & 1U) diag[i] = 1.0;
    }
    return qcore::Projector::validate(qcore::ComplexMatrix::diagonal(diag));
}

} // namespace qclogic::logic
