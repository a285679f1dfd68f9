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

#include "qclogic/logic/relations.hpp"

#include <cmath>
#include <numbers>

namespace qclogic::logic {

using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::Ket;

std::string_view relation_name(Relation r) noexcept {
    switch (r) {
    case Relation::EquivRhoP: return "equiv_rho_P";
    case Relation::EquivRho: return "equiv_rho";
    case Relation::EquivP: return "equiv_P";
    case Relation::EquivTotal: return "equiv_total";
    case Relation::LeqRhoP: return "leq_rho_P";
    case Relation::LeqRho: return "leq_rho";
    case Relation::LeqP: return "leq_P";
    }
    return "?";
}

Relation relation_from_name(std::string_view name) {
    for (const auto r : {Relation::EquivRhoP, Relation::EquivRho, Relation::EquivP,
                         Relation::EquivTotal, Relation::LeqRhoP, Relation::LeqRho,
                         Relation::LeqP}) {
        if (name == relation_name(r)) return r;
    }
    if (name == "total") return Relation::EquivTotal;
    if (name == "rho") return Relation::EquivRho;
    if (name == "P") return Relation::EquivP;
    if (name == "rho_P") return Relation::EquivRhoP;
    fail(ErrorKind::InvalidArgument, "unknown relation '" + std::string(name) + "'");
}

void TruthContext::check() const {
    if (!state && !event) {
        fail(ErrorKind::InvalidArgument, "truth context needs a state or an event");
    }
    if (state && event) {
        qcore::require_same_dim(state->matrix(), event->matrix(), "truth context");
    }
}

namespace {

ComplexMatrix forward(const UnitaryGate &u, const DensityOperator &rho) {
    return u.matrix() * rho.matrix() * u.matrix().adjoint();
}

ComplexMatrix backward(const UnitaryGate &u, const Projector &p) {
    return u.matrix().adjoint() * p.matrix() * u.matrix();
}

void check_gates(const UnitaryGate &u, const UnitaryGate &v) {
    qcore::require_same_dim(u.matrix(), v.matrix(), "gate comparison");
}

// Eigenvector of the Hermitian part of `d` with the largest |eigenvalue|;
// ties go to the positive eigenvalue.
Ket dominant_direction(const ComplexMatrix &d) {
    const auto spec = qcore::hermitian_spectrum(d);
    const Eigen::Index last = spec.values.size() - 1;
    const double lo = spec.values(0);
    const double hi = spec.values(last);
    const bool take_high = hi >= -lo - 1e-12;
    return spec.vectors.col(take_high ? last : 0);
}

struct Lowest {
    double value;
    Ket vector;
};

Lowest lowest_direction(const ComplexMatrix &d) {
    const auto spec = qcore::hermitian_spectrum(d);
    return {spec.values(0), spec.vectors.col(0)};
}

EquivalenceReport make_report(Relation r, double tol) {
    EquivalenceReport out{};
    out.relation = r;
    out.tolerance = tol;
    return out;
}

} // namespace

double truth_value(const UnitaryGate &u, const DensityOperator &rho, const Projector &p) {
    qcore::require_same_dim(u.matrix(), rho.matrix(), "truth_value");
    qcore::require_same_dim(u.matrix(), p.matrix(), "truth_value");
    return qcore::born(qcore::conjugate(u, rho), p);
}

EquivalenceReport equiv_rho_P(const UnitaryGate &u, const UnitaryGate &v,
                              const DensityOperator &rho, const Projector &p, double tol) {
    check_gates(u, v);
    auto out = make_report(Relation::EquivRhoP, tol);
    out.lhs = truth_value(u, rho, p);
    out.rhs = truth_value(v, rho, p);
    out.deviation = std::abs(*out.lhs - *out.rhs);
    out.holds = out.deviation <= tol;
    if (!out.holds) {
        out.witness = TruthContext{rho, p};
    }
    return out;
}

EquivalenceReport equiv_rho(const UnitaryGate &u, const UnitaryGate &v,
                            const DensityOperator &rho, double tol) {
    check_gates(u, v);
    qcore::require_same_dim(u.matrix(), rho.matrix(), "equiv_rho");
    auto out = make_report(Relation::EquivRho, tol);
    const ComplexMatrix diff = forward(u, rho) - forward(v, rho);
    out.deviation = diff.max_abs();
    out.holds = out.deviation <= tol;
    if (!out.holds) {
        const auto event = Projector::onto(dominant_direction(diff));
        out.lhs = truth_value(u, rho, event);
        out.rhs = truth_value(v, rho, event);
        out.witness = TruthContext{rho, event};
    }
    return out;
}

EquivalenceReport equiv_P(const UnitaryGate &u, const UnitaryGate &v, const Projector &p,
                          double tol) {
    check_gates(u, v);
    qcore::require_same_dim(u.matrix(), p.matrix(), "equiv_P");
    auto out = make_report(Relation::EquivP, tol);
    const ComplexMatrix diff = backward(u, p) - backward(v, p);
    out.deviation = diff.max_abs();
    out.holds = out.deviation <= tol;
    if (!out.holds) {
        const auto state = DensityOperator::pure(dominant_direction(diff));
        out.lhs = truth_value(u, state, p);
        out.rhs = truth_value(v, state, p);
        out.witness = TruthContext{state, p};
    }
    return out;
}

EquivalenceReport equiv_total(const UnitaryGate &u, const UnitaryGate &v, double tol) {
    check_gates(u, v);
    auto out = make_report(Relation::EquivTotal, tol);
    const std::size_t dim = u.dim();
    const Eigen::MatrixXcd w = v.matrix().eigen().adjoint() * u.matrix().eigen();

    double theta = 0.0;
    for (Eigen::Index k = 0; k < w.rows(); ++k) {
        if (std::abs(w(k, k)) > tol) {
            theta = std::arg(w(k, k));
            break;
        }
    }
    const Eigen::MatrixXcd scalar =
        std::polar(1.0, theta) * Eigen::MatrixXcd::Identity(w.rows(), w.cols());
    out.theta = theta;
    out.deviation = (w - scalar).cwiseAbs().maxCoeff();
    out.holds = out.deviation <= tol;
    out.strict_equal = qcore::distance(u.matrix(), v.matrix()) <= tol;
    if (out.holds) {
        return out;
    }

    // A non-scalar V^dagger U fails to commute with some basis state or some
    // (|i> + c|j>)/sqrt2 with c in {1, i}, so this search always finds one.
    std::optional<DensityOperator> best;
    double best_gap = -1.0;
    auto consider = [&](const Ket &psi) {
        if (best_gap > tol) return;
        auto state = DensityOperator::pure(psi);
        const double gap = (forward(u, state) - forward(v, state)).max_abs();
        if (gap > best_gap) {
            best_gap = gap;
            best = std::move(state);
        }
    };
    for (std::size_t i = 0; i < dim; ++i) {
        consider(qcore::basis_ket(dim, i));
    }
    const double s = 1.0 / std::numbers::sqrt2;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            for (const Complex c : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
                Ket psi = Ket::Zero(static_cast<Eigen::Index>(dim));
                psi(static_cast<Eigen::Index>(i)) = s;
                psi(static_cast<Eigen::Index>(j)) = s * c;
                consider(psi);
            }
        }
    }
    const auto event = Projector::onto(dominant_direction(forward(u, *best) - forward(v, *best)));
    out.lhs = truth_value(u, *best, event);
    out.rhs = truth_value(v, *best, event);
    out.witness = TruthContext{*best, event};
    return out;
}

EquivalenceReport leq_rho_P(const UnitaryGate &u, const UnitaryGate &v,
                            const DensityOperator &rho, const Projector &p, double tol) {
    check_gates(u, v);
    auto out = make_report(Relation::LeqRhoP, tol);
    out.lhs = truth_value(u, rho, p);
    out.rhs = truth_value(v, rho, p);
    out.deviation = std::max(0.0, *out.lhs - *out.rhs);
    out.holds = out.deviation <= tol;
    if (!out.holds) {
        out.witness = TruthContext{rho, p};
    }
    return out;
}

EquivalenceReport leq_rho(const UnitaryGate &u, const UnitaryGate &v,
                          const DensityOperator &rho, double tol) {
    check_gates(u, v);
    qcore::require_same_dim(u.matrix(), rho.matrix(), "leq_rho");
    auto out = make_report(Relation::LeqRho, tol);
    const auto low = lowest_direction(forward(v, rho) - forward(u, rho));
    out.deviation = std::max(0.0, -low.value);
    out.holds = out.deviation <= tol;
    if (!out.holds) {
        const auto event = Projector::onto(low.vector);
        out.lhs = truth_value(u, rho, event);
        out.rhs = truth_value(v, rho, event);
        out.witness = TruthContext{rho, event};
    }
    return out;
}

EquivalenceReport leq_P(const UnitaryGate &u, const UnitaryGate &v, const Projector &p,
                        double tol) {
    check_gates(u, v);
    qcore::require_same_dim(u.matrix(), p.matrix(), "leq_P");
    auto out = make_report(Relation::LeqP, tol);
    const auto low = lowest_direction(backward(v, p) - backward(u, p));
    out.deviation = std::max(0.0, -low.value);
    out.holds = out.deviation <= tol;
    if (!out.holds) {
        const auto state = DensityOperator::pure(low.vector);
        out.lhs = truth_value(u, state, p);
        out.rhs = truth_value(v, state, p);
        out.witness = TruthContext{state, p};
    }
    return out;
}

EquivalenceReport compare(Relation r, const UnitaryGate &u, const UnitaryGate &v,
                          const TruthContext &context, double tol) {
    const auto need_state = [&]() -> const DensityOperator & {
        if (!context.state) {
            fail(ErrorKind::InvalidArgument,
                 std::string(relation_name(r)) + " needs a state");
        }
        return *context.state;
    };
    const auto need_event = [&]() -> const Projector & {
        if (!context.event) {
            fail(ErrorKind::InvalidArgument,
                 std::string(relation_name(r)) + " needs an event");
        }
        return *context.event;
    };
    switch (r) {
    case Relation::EquivTotal: return equiv_total(u, v, tol);
    case Relation::EquivRho: return equiv_rho(u, v, need_state(), tol);
    case Relation::EquivP: return equiv_P(u, v, need_event(), tol);
    case Relation::EquivRhoP: return equiv_rho_P(u, v, need_state(), need_event(), tol);
    case Relation::LeqRho: return leq_rho(u, v, need_state(), tol);
    case Relation::LeqP: return leq_P(u, v, need_event(), tol);
    case Relation::LeqRhoP: return leq_rho_P(u, v, need_state(), need_event(), tol);
    }
    fail(ErrorKind::InvalidArgument, "unhandled relation");
}

EquivalenceReport equiv_rho_sampled(const UnitaryGate &u, const UnitaryGate &v,
                                    const DensityOperator &rho,
                                    std::span<const UnitaryGate> bases, double tol) {
    check_gates(u, v);
    auto out = make_report(Relation::EquivRho, tol);
    out.approximate = true;
    out.holds = true;
    for (const auto &basis : bases) {
        qcore::require_same_dim(u.matrix(), basis.matrix(), "sampled basis");
        for (Eigen::Index k = 0; k < basis.matrix().eigen().cols(); ++k) {
            const auto event = Projector::onto(basis.matrix().eigen().col(k));
            const double a = truth_value(u, rho, event);
            const double b = truth_value(v, rho, event);
            const double gap = std::abs(a - b);
            if (gap > out.deviation) {
                out.deviation = gap;
            }
            if (gap > tol && out.holds) {
                out.holds = false;
                out.lhs = a;
                out.rhs = b;
                out.witness = TruthContext{rho, event};
            }
        }
    }
    return out;
}

double hierarchy_slack(std::size_t dim, double tol) {
    const auto d = static_cast<double>(dim);
    return 2.0 * d * d * tol;
}

namespace {

void propagate(const EquivalenceReport &stronger, EquivalenceReport &weaker, double slack) {
    if (!stronger.holds || weaker.holds) {
        return;
    }
    if (weaker.deviation > slack) {
        fail(ErrorKind::HierarchyViolation,
             std::string(relation_name(stronger.relation)) + " holds but " +
                 std::string(relation_name(weaker.relation)) + " fails by " +
                 std::to_string(weaker.deviation));
    }
    weaker.holds = true;
    weaker.witness.reset();
}

} // namespace

HierarchyReport hierarchy_check(const UnitaryGate &u, const UnitaryGate &v,
                                const DensityOperator &rho, const Projector &p, double tol) {
    HierarchyReport out{equiv_total(u, v, tol), equiv_rho(u, v, rho, tol),
                        equiv_rho_P(u, v, rho, p, tol), equiv_P(u, v, p, tol)};
    const double slack = hierarchy_slack(u.dim(), tol);
    propagate(out.total, out.rho, slack);
    propagate(out.total, *out.P, slack);
    propagate(out.rho, out.rho_P, slack);
    propagate(*out.P, out.rho_P, slack);
    return out;
}

} // namespace qclogic::logic
