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

#include "qclogic/omlattice/scheme.hpp"

#include <cmath>

namespace qclogic::omlattice {

void ComputationalScheme::validate() const {
    for (const auto &s : states) require_same_lattice(lattice, s.lattice(), "scheme state");
    for (const auto &g : generators) require_same_lattice(lattice, g.lattice(), "scheme generator");
    if (initial >= states.size()) {
        fail(ErrorKind::IndexOutOfRange, "initial state " + std::to_string(initial) + " of " +
                                             std::to_string(states.size()));
    }
}

namespace {

enum class Mode { Equiv, Leq };

void check_word(AutomorphismWord w, const LatticePtr &l) {
    for (const auto &a : w) require_same_lattice(a.lattice(), l, "automorphism word");
}

// Compares U(nu) and V(nu); returns true when the relation holds.
bool compare_on(Mode mode, AutomorphismWord u, AutomorphismWord v, const LatticeState &nu,
                std::optional<std::size_t> x, double tol, GeneralizedReport &out) {
    check_word(u, nu.lattice());
    check_word(v, nu.lattice());
    const LatticeState mu = pushforward(u, nu);
    const LatticeState mu2 = pushforward(v, nu);
    const std::size_t n = nu.lattice()->size();
    std::size_t lo = 0;
    std::size_t hi = n;
    if (x) {
        nu.lattice()->check_index(*x);
        lo = *x;
        hi = *x + 1;
    }
    for (std::size_t e = lo; e < hi; ++e) {
        const double a = mu.values()[e];
        const double b = mu2.values()[e];
        const double gap = mode == Mode::Equiv ? std::abs(a - b) : std::max(0.0, a - b);
        out.deviation = std::max(out.deviation, gap);
        if (gap > tol && out.holds) {
            out.holds = false;
            out.element = e;
            out.lhs = a;
            out.rhs = b;
        }
    }
    if (x && out.holds) {
        out.lhs = mu.values()[*x];
        out.rhs = mu2.values()[*x];
    }
    return out.holds;
}

GeneralizedReport start(Mode mode, const char *scope, double tol) {
    GeneralizedReport r;
    r.relation = mode == Mode::Equiv ? "equiv" : "leq";
    r.scope = scope;
    r.tolerance = tol;
    return r;
}

GeneralizedReport single(Mode mode, AutomorphismWord u, AutomorphismWord v,
                         const LatticeState &nu, std::optional<std::size_t> x, double tol) {
    auto out = start(mode, x ? "nu_X" : "nu", tol);
    compare_on(mode, u, v, nu, x, tol, out);
    return out;
}

GeneralizedReport all(Mode mode, AutomorphismWord u, AutomorphismWord v,
                      std::span<const LatticeState> states, std::optional<std::size_t> x,
                      double tol) {
    auto out = start(mode, "all", tol);
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (!compare_on(mode, u, v, states[s], x, tol, out) && !out.state_index) {
            out.state_index = s;
        }
    }
    if (out.holds) {
        out.lhs.reset();
        out.rhs.reset();
    }
    return out;
}

} // namespace

GeneralizedReport generalized_equiv(AutomorphismWord u, AutomorphismWord v,
                                    const LatticeState &nu, std::optional<std::size_t> x,
                                    double tol) {
    return single(Mode::Equiv, u, v, nu, x, tol);
}

GeneralizedReport generalized_equiv_all(AutomorphismWord u, AutomorphismWord v,
                                        std::span<const LatticeState> states,
                                        std::optional<std::size_t> x, double tol) {
    return all(Mode::Equiv, u, v, states, x, tol);
}

GeneralizedReport generalized_leq(AutomorphismWord u, AutomorphismWord v,
                                  const LatticeState &nu, std::optional<std::size_t> x,
                                  double tol) {
    return single(Mode::Leq, u, v, nu, x, tol);
}

GeneralizedReport generalized_leq_all(AutomorphismWord u, AutomorphismWord v,
                                      std::span<const LatticeState> states,
                                      std::optional<std::size_t> x, double tol) {
    return all(Mode::Leq, u, v, states, x, tol);
}

std::vector<double> run_protocol(const ComputationalScheme &scheme,
                                 std::span<const std::size_t> word,
                                 std::span<const std::size_t> readout) {
    scheme.validate();
    LatticeState mu = scheme.states[scheme.initial];
    for (const auto g : word) {
        if (g >= scheme.generators.size()) {
            fail(ErrorKind::IndexOutOfRange, "generator " + std::to_string(g) + " of " +
                                                 std::to_string(scheme.generators.size()));
        }
        mu = pushforward(scheme.generators[g], mu);
    }
    std::vector<double> out;
    out.reserve(readout.size());
    for (const auto x : readout) {
        out.push_back(mu.value(x));
    }
    return out;
}

} // namespace qclogic::omlattice
