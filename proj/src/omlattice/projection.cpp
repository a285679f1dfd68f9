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

#include "qclogic/omlattice/projection.hpp"

#include <map>
#include <numbers>
#include <utility>

#include <Eigen/SVD>

namespace qclogic::omlattice {

using qcore::ComplexMatrix;
using qcore::Projector;

namespace {

// Singular values below this count as zero in the range computations.
constexpr double kRankThreshold = 1e-8;

Projector projector_from_columns(const Eigen::MatrixXcd &basis, std::size_t dim) {
    if (basis.cols() == 0) return Projector::zero(dim);
    Eigen::MatrixXcd p = basis * basis.adjoint();
    return Projector::validate(ComplexMatrix(std::move(p)));
}

std::string wrap(const std::string &name) {
    return name.find(' ') == std::string::npos ? name : "(" + name + ")";
}

} // namespace

Projector projector_meet(const Projector &p, const Projector &q) {
    qcore::require_same_dim(p.matrix(), q.matrix(), "projector meet");
    const auto d = static_cast<Eigen::Index>(p.dim());
    Eigen::MatrixXcd stacked(2 * d, d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    stacked.topRows(d) = id - p.matrix().eigen();
    stacked.bottomRows(d) = id - q.matrix().eigen();
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > kRankThreshold) ++rank;
    }
    return projector_from_columns(svd.matrixV().rightCols(d - rank), p.dim());
}

Projector projector_join(const Projector &p, const Projector &q) {
    qcore::require_same_dim(p.matrix(), q.matrix(), "projector join");
    const auto d = static_cast<Eigen::Index>(p.dim());
    Eigen::MatrixXcd side(d, 2 * d);
    side.leftCols(d) = p.matrix().eigen();
    side.rightCols(d) = q.matrix().eigen();
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(side, Eigen::ComputeFullU);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > kRankThreshold) ++rank;
    }
    return projector_from_columns(svd.matrixU().leftCols(rank), p.dim());
}

namespace {

class ClosureBuilder {
  public:
    explicit ClosureBuilder(std::size_t cap) : cap_(cap) {}

    std::size_t add(const Projector &p, const std::string &name) {
        if (const auto hit = find(p)) return *hit;
        if (mats_.size() >= cap_) {
            fail(ErrorKind::ClosureCapExceeded,
                 "projection lattice closure exceeds " + std::to_string(cap_) + " elements");
        }
        mats_.push_back(p);
        names_.push_back(name);
        return mats_.size() - 1;
    }

    std::optional<std::size_t> find(const Projector &p) const {
        for (std::size_t i = 0; i < mats_.size(); ++i) {
            const double dist = qcore::distance(mats_[i].matrix(), p.matrix());
            if (dist <= kProjectorMergeTolerance) return i;
            if (dist <= kCollisionFactor * kProjectorMergeTolerance) {
                fail(ErrorKind::ToleranceCollision,
                     "projector lies " + std::to_string(dist) + " from element '" + names_[i] +
                         "': too close to separate, too far to merge");
            }
        }
        return std::nullopt;
    }

    std::vector<Projector> mats_;
    std::vector<std::string> names_;

  private:
    std::size_t cap_;
};

} // namespace

ProjectionLattice projection_oml(std::size_t dim, std::span<const Projector> generators,
                                 std::vector<std::string> names, std::size_t cap) {
    if (!names.empty() && names.size() != generators.size()) {
        fail(ErrorKind::DimensionMismatch, "one name per generator required");
    }
    if (cap < 2) {
        fail(ErrorKind::ClosureCapExceeded, "closure cap must allow 0 and 1");
    }
    ClosureBuilder b(cap);
    const std::size_t zero = b.add(Projector::zero(dim), "0");
    const std::size_t one = b.add(Projector::identity(dim), "1");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].dim() != dim) {
            fail(ErrorKind::DimensionMismatch, "generator " + std::to_string(i) + " has dim " +
                                                   std::to_string(generators[i].dim()));
        }
        b.add(generators[i], names.empty() ? "P" + std::to_string(i) : names[i]);
    }

    std::vector<std::size_t> ortho;
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> ops;
    for (std::size_t done = 0; done < b.mats_.size();) {
        const std::size_t n = b.mats_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= ortho.size()) {
                ortho.push_back(b.add(b.mats_[i].complement(), "~" + wrap(b.names_[i])));
            }
            for (std::size_t j = i; j < n; ++j) {
                if (ops.count({i, j})) continue;
                const Projector pi = b.mats_[i];
                const Projector pj = b.mats_[j];
                const std::string ni = wrap(b.names_[i]);
                const std::string nj = wrap(b.names_[j]);
                const std::size_t m = b.add(projector_meet(pi, pj), ni + " & " + nj);
                const std::size_t jn = b.add(projector_join(pi, pj), ni + " | " + nj);
                ops[{i, j}] = {m, jn};
            }
        }
        done = n;
    }

    // Reorder: 0, generators and derived elements in discovery order, 1 last.
    const std::size_t n = b.mats_.size();
    std::vector<std::size_t> order;
    order.push_back(zero);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != zero && i != one) order.push_back(i);
    }
    order.push_back(one);
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;

    std::vector<std::string> out_names(n);
    std::vector<Projector> projectors;
    std::vector<std::uint32_t> meet(n * n);
    std::vector<std::uint32_t> join(n * n);
    std::vector<std::uint32_t> orth(n);
    for (std::size_t k = 0; k < n; ++k) {
        out_names[k] = b.names_[order[k]];
        projectors.push_back(b.mats_[order[k]]);
        orth[k] = static_cast<std::uint32_t>(position[ortho[order[k]]]);
    }
    for (const auto &[key, value] : ops) {
        const std::size_t i = position[key.first];
        const std::size_t j = position[key.second];
        const auto m = static_cast<std::uint32_t>(position[value.first]);
        const auto jn = static_cast<std::uint32_t>(position[value.second]);
        meet[i * n + j] = meet[j * n + i] = m;
        join[i * n + j] = join[j * n + i] = jn;
    }
    return {FiniteOML::from_tables(std::move(out_names), std::move(meet), std::move(join),
                                   std::move(orth)),
            std::move(projectors), dim};
}

std::optional<std::size_t> find_projector(const ProjectionLattice &pl, const Projector &p) {
    if (p.dim() != pl.dim) return std::nullopt;
    for (std::size_t i = 0; i < pl.projectors.size(); ++i) {
        if (qcore::distance(pl.projectors[i].matrix(), p.matrix()) <= kProjectorMergeTolerance) {
            return i;
        }
    }
    return std::nullopt;
}

LatticeState gleason_state(const qcore::DensityOperator &rho, const ProjectionLattice &pl) {
    if (rho.dim() != pl.dim) {
        fail(ErrorKind::DimensionMismatch, "state of dim " + std::to_string(rho.dim()) +
                                               " on a lattice over dim " +
                                               std::to_string(pl.dim));
    }
    std::vector<double> values;
    values.reserve(pl.projectors.size());
    for (const auto &p : pl.projectors) {
        values.push_back(qcore::born(rho, p));
    }
    return LatticeState::create(pl.lattice, std::move(values), StateOrigin::Numeric);
}

LatticeAutomorphism unitary_automorphism(const qcore::UnitaryGate &u, const ProjectionLattice &pl) {
    if (u.dim() != pl.dim) {
        fail(ErrorKind::DimensionMismatch, "gate of dim " + std::to_string(u.dim()) +
                                               " on a lattice over dim " +
                                               std::to_string(pl.dim));
    }
    std::vector<std::size_t> map;
    map.reserve(pl.projectors.size());
    for (std::size_t i = 0; i < pl.projectors.size(); ++i) {
        const ComplexMatrix image =
            u.matrix().adjoint() * pl.projectors[i].matrix() * u.matrix();
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < pl.projectors.size() && !hit; ++j) {
            if (qcore::distance(pl.projectors[j].matrix(), image) <= kProjectorMergeTolerance) {
                hit = j;
            }
        }
        if (!hit) {
            fail(ErrorKind::NotClosedUnderConjugation,
                 "image of element '" + pl.lattice->name(i) + "' is not in the lattice");
        }
        map.push_back(*hit);
    }
    return LatticeAutomorphism::create(pl.lattice, std::move(map));
}

ProjectionLattice mo2_lattice() {
    const double s = 1.0 / std::numbers::sqrt2;
    qcore::Ket plus(2), minus(2);
    plus << s, s;
    minus << s, -s;
    const std::vector<Projector> gens = {Projector::basis(2, 0), Projector::basis(2, 1),
                                         Projector::onto(plus), Projector::onto(minus)};
    return projection_oml(2, gens, {"|0>", "|1>", "|+>", "|->"});
}

ProjectionLattice diagonal_lattice(std::size_t width) {
    if (width == 0 || width > 2) {
        fail(ErrorKind::SizeCapExceeded, "diagonal lattices are built for 1 or 2 qubits");
    }
    const std::size_t dim = std::size_t{1} << width;
    std::vector<Projector> gens;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) {
        gens.push_back(Projector::basis(dim, i));
        std::string label(width, '0');
        for (std::size_t b = 0; b < width; ++b) {
            if ((i >> (width - 1 - b)) & 1U) label[b] = '1';
        }
        names.push_back("|" + label + ">");
    }
    return projection_oml(dim, gens, std::move(names));
}

} // namespace qclogic::omlattice
