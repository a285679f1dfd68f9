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

// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 when
// any criterion fails. Tolerances are fixed here and never loosened.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qclogic/algorithms/deutsch_jozsa.hpp"
#include "qclogic/algorithms/period.hpp"
#include "qclogic/classical/circuit.hpp"
#include "qclogic/classical/stochastic.hpp"
#include "qclogic/gates/gates.hpp"
#include "qclogic/logic/embedding.hpp"
#include "qclogic/logic/relations.hpp"
#include "qclogic/omlattice/lattice.hpp"
#include "qclogic/omlattice/projection.hpp"
#include "qclogic/omlattice/scheme.hpp"
#include "qclogic/qcore/algebra.hpp"
#include "support/naive.hpp"
#include "support/random.hpp"

namespace {

using namespace qclogic;
using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::DensityOperator;
using qcore::Ket;
using qcore::Projector;
using qcore::UnitaryGate;
using testing::Rng;

constexpr double kTol = 1e-9;          // probabilities and truth values
constexpr double kZeroTol = 1e-12;     // outcomes that must vanish
constexpr double kAxiomTol = 1e-8;     // quantum probability axioms
constexpr double kKolmogorovTol = 1e-12;
constexpr double kDjSeconds = 1.0;
constexpr double kPeriodSeconds = 5.0;

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Records the first failure; later failures only bump the count.
class Checker {
  public:
    void expect(bool ok, const std::string &what) {
        ++checks_;
        if (ok) return;
        if (failures_++ == 0) first_ = what;
    }
    [[nodiscard]] Verdict verdict(const std::string &summary) const {
        if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
        return {false, std::to_string(failures_) + "/" + std::to_string(checks_) +
                           " checks failed; first: " + first_};
    }

  private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

UnitaryGate gate(gates::GateKind kind, double param = 0.0) {
    return gates::elementary({kind, param, {0}}, 1);
}

// ---------------------------------------------------------------------------

Verdict deutsch_jozsa_exactness() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    const double s = 1.0 / std::sqrt(2.0);
    for (int k = 1; k <= 4; ++k) {
        const auto f = algorithms::OracleFunction::one_bit(k);
        const auto run = algorithms::deutsch_jozsa(f);
        const int f0 = static_cast<int>(f(0));
        const int parity = static_cast<int>(f(0) ^ f(1));
        const std::string name = "f" + std::to_string(k);
        const std::string correct = parity == 0 ? "0" : "1";
        c.expect(std::abs(run.result.probability(correct) - 1.0) <= kTol,
                 name + " P(first=" + correct + ")=" + fmt(run.result.probability(correct)));
        c.expect(run.result.verdict == (parity == 0 ? "constant" : "balanced"), name + " verdict");

        // (-1)^{f(0)} ((1 + (-1)^{f(0)^f(1)})|0> + (1 - (-1)^{f(0)^f(1)})|1>)(|0> - |1>),
        // normalized.
        const double sign = f0 == 0 ? 1.0 : -1.0;
        const double p = parity == 0 ? 1.0 : -1.0;
        const double first[2] = {(1 + p) / 2, (1 - p) / 2};
        const double second[2] = {s, -s};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const Complex expected = sign * first[a] * second[b];
                const Complex got = run.trace.final_state(2 * a + b);
                c.expect(std::abs(got - expected) <= kTol, name + " amplitude mismatch");
            }
    }
    const double elapsed = seconds_since(t0);
    c.expect(elapsed < kDjSeconds, "runtime " + fmt(elapsed) + " s");
    return c.verdict("f1..f4 exact, final states match the closed form, " + fmt(elapsed) + " s");
}

// Independent oracle for the post-QFT distribution of one branch: explicit
// DFT sum over the support {x0 + k r}.
std::vector<double> branch_oracle(std::size_t n, std::size_t r, std::size_t x0) {
    const std::size_t kk = n / r;
    std::vector<double> out(n);
    for (std::size_t c = 0; c < n; ++c) {
        Complex amp = 0.0;
        for (std::size_t k = 0; k < kk; ++k) {
            const double angle = 2 * std::numbers::pi * static_cast<double>(c * (x0 + k * r)) /
                                 static_cast<double>(n);
            amp += std::polar(1.0, angle);
        }
        amp /= std::sqrt(static_cast<double>(n) * static_cast<double>(kk));
        out[c] = std::norm(amp);
    }
    return out;
}

Verdict period_spectrum() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<std::size_t, std::size_t> cases[] = {{4, 2}, {8, 2}, {8, 4}, {16, 4}};
    for (const auto &[n, r] : cases) {
        const auto spec = algorithms::PeriodicSpec::canonical(n, r);
        const std::string tag = "(N=" + std::to_string(n) + ",r=" + std::to_string(r) + ")";
        auto check = [&](const algorithms::RunResult &res, const std::string &mode) {
            for (std::size_t y = 0; y < n; ++y) {
                const double p = res.probability(std::to_string(y));
                if (y % (n / r) == 0) {
                    c.expect(std::abs(p - 1.0 / static_cast<double>(r)) <= kTol,
                             tag + mode + " P(" + std::to_string(y) + ")=" + fmt(p));
                } else {
                    c.expect(std::abs(p) <= kZeroTol, tag + mode + " P(" + std::to_string(y) +
                                                          ")=" + fmt(p));
                }
            }
        };
        check(algorithms::period_find(spec).result, " mixture");
        for (std::uint64_t y0 = 0; y0 < r; ++y0) {
            algorithms::PeriodOptions opts;
            opts.mode = algorithms::PeriodMode::Branching;
            opts.y0 = y0;
            const auto run = algorithms::period_find(spec, opts);
            check(run.result, " y0=" + std::to_string(y0));
            const auto expected = branch_oracle(n, r, run.branches.at(0).x0);
            for (std::size_t y = 0; y < n; ++y) {
                c.expect(std::abs(run.result.probability(std::to_string(y)) - expected[y]) <= kTol,
                         tag + " oracle mismatch at " + std::to_string(y));
            }
        }
    }
    const double elapsed = seconds_since(t0);
    c.expect(elapsed < kPeriodSeconds, "runtime " + fmt(elapsed) + " s");
    return c.verdict("4 (N,r) pairs, every y0, " + fmt(elapsed) + " s");
}

// ---------------------------------------------------------------------------

// A unitary diagonal in the eigenbasis of rho, so it commutes with rho.
UnitaryGate commuting_unitary(const DensityOperator &rho, Rng &rng) {
    const auto spec = qcore::hermitian_spectrum(rho.matrix());
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    Eigen::VectorXcd phases(spec.values.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, angle(rng));
    const Eigen::MatrixXcd w = spec.vectors * phases.asDiagonal() * spec.vectors.adjoint();
    return UnitaryGate::validate(ComplexMatrix(w));
}

Verdict equivalence_hierarchy() {
    Checker c;
    Rng rng(0xac3);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::size_t cases = 0, total_held = 0, rho_held = 0, rho_p_held = 0;
    for (std::size_t dim : {2u, 4u}) {
        for (int i = 0; i < 600; ++i) {
            const auto u = testing::random_unitary(dim, rng);
            const auto rho = testing::random_density(dim, rng, 1 + static_cast<std::size_t>(i) % dim);
            const auto p = testing::random_projector(dim, 1 + static_cast<std::size_t>(i) % (dim - 1), rng);
            UnitaryGate v = u;
            switch (i % 3) {
            case 0: // global phase
                v = UnitaryGate::validate(std::polar(1.0, angle(rng)) * u.matrix());
                break;
            case 1: // agrees on rho only
                v = u * commuting_unitary(rho, rng);
                break;
            default: v = testing::random_unitary(dim, rng);
            }
            const auto total = logic::equiv_total(u, v);
            const auto on_rho = logic::equiv_rho(u, v, rho);
            const auto on_rho_p = logic::equiv_rho_P(u, v, rho, p);
            ++cases;
            total_held += total.holds;
            rho_held += on_rho.holds;
            rho_p_held += on_rho_p.holds;
            const std::string tag = "dim " + std::to_string(dim) + " case " + std::to_string(i);
            c.expect(!total.holds || on_rho.holds, tag + ": equiv_total without equiv_rho");
            c.expect(!on_rho.holds || on_rho_p.holds, tag + ": equiv_rho without equiv_rho_P");
            // Cases built to satisfy a relation must satisfy it.
            if (i % 3 == 0) c.expect(total.holds, tag + ": phase-related pair rejected");
            if (i % 3 == 1) c.expect(on_rho.holds, tag + ": rho-commuting pair rejected");
        }
    }
    c.expect(cases >= 1000, "only " + std::to_string(cases) + " cases");

    // Converse failures.
    const auto id = UnitaryGate::identity(2);
    const auto z = gate(gates::GateKind::Z);
    const auto x = gate(gates::GateKind::X);
    const auto ket0 = DensityOperator::basis_state(2, 0);
    const auto plus = DensityOperator::pure(Ket::Constant(2, 1.0 / std::sqrt(2.0)));
    c.expect(logic::equiv_rho(id, z, ket0).holds && !logic::equiv_total(id, z).holds,
             "(1, Z, |0><0|) is not a converse witness");
    // X fixes |+><+|, so the tuple (1, X, |+><+|, |0><0|) is rho-equivalent as
    // well; the rho_P gap is witnessed with the roles of state and event swapped.
    c.expect(logic::equiv_rho(id, x, plus).holds, "X does not fix |+><+|");
    const auto plus_event = Projector::onto(Ket::Constant(2, 1.0 / std::sqrt(2.0)));
    const auto rx = logic::equiv_rho(id, x, ket0);
    c.expect(logic::equiv_rho_P(id, x, ket0, plus_event).holds && !rx.holds,
             "(1, X, |0><0|, |+><+|) is not a converse witness");
    c.expect(rx.witness && rx.witness->event &&
                 std::abs(logic::truth_value(id, ket0, *rx.witness->event) -
                          logic::truth_value(x, ket0, *rx.witness->event)) > 1e-3,
             "equiv_rho witness event does not separate 1 and X");

    std::ostringstream s;
    s << cases << " random cases (total " << total_held << ", rho " << rho_held << ", rho_P "
      << rho_p_held << " held); both converse witnesses exhibited";
    return c.verdict(s.str());
}

// ---------------------------------------------------------------------------

Verdict quantum_axioms() {
    Checker c;
    Rng rng(0xac4);
    const std::size_t dims[] = {2, 3, 4, 8};
    std::size_t pairs = 0, families = 0;
    double worst = 0.0;
    for (int i = 0; i < 1200; ++i) {
        const std::size_t dim = dims[i % 4];
        const auto sigma = testing::random_density(dim, rng, 1 + static_cast<std::size_t>(i) % dim);
        const auto p = testing::random_projector(dim, 1 + static_cast<std::size_t>(i / 4) % dim, rng);
        const double zero = qcore::born(sigma, Projector::zero(dim));
        const double comp = std::abs(qcore::born(sigma, p.complement()) - (1.0 - qcore::born(sigma, p)));
        const double full = std::abs(qcore::born(sigma, Projector::identity(dim)) - 1.0);
        worst = std::max({worst, std::abs(zero), comp, full});
        c.expect(std::abs(zero) <= kAxiomTol, "P(0)=" + fmt(zero));
        c.expect(comp <= kAxiomTol, "complement violation " + fmt(comp));
        c.expect(full <= kAxiomTol, "P(1) violation " + fmt(full));
        ++pairs;
    }
    for (int i = 0; i < 400; ++i) {
        const std::size_t size = 1 + static_cast<std::size_t>(i) % 8;
        const std::size_t dim = i % 2 == 0 ? 8 : 16;
        std::vector<std::size_t> ranks(size, 1);
        for (std::size_t k = 0; k < size && dim >= 16; ++k) ranks[k] = 1 + k % 2;
        const auto family = testing::random_orthogonal_family(dim, ranks, rng);
        const auto sigma = testing::random_density(dim, rng);
        Projector join = family[0];
        double sum = 0.0;
        for (std::size_t k = 0; k < family.size(); ++k) {
            if (k > 0) join = omlattice::projector_join(join, family[k]);
            sum += qcore::born(sigma, family[k]);
        }
        const double additivity = std::abs(qcore::born(sigma, join) - sum);
        worst = std::max(worst, additivity);
        c.expect(additivity <= kAxiomTol, "additivity violation " + fmt(additivity) + " for family of " +
                                              std::to_string(size));
        ++families;
    }
    c.expect(pairs >= 1000, "only " + std::to_string(pairs) + " pairs");
    return c.verdict(std::to_string(pairs) + " (sigma,P) pairs, " + std::to_string(families) +
                     " orthogonal families of size 1..8, worst violation " + fmt(worst));
}

// ---------------------------------------------------------------------------

classical::BoolCircuit random_circuit(std::size_t arity, int depth, Rng &rng) {
    std::uniform_int_distribution<int> op(0, depth <= 0 ? 0 : 3);
    std::uniform_int_distribution<std::size_t> wire(0, arity - 1);
    switch (op(rng)) {
    case 1: return classical::BoolCircuit::lor(random_circuit(arity, depth - 1, rng),
                                               random_circuit(arity, depth - 1, rng));
    case 2: return classical::BoolCircuit::land(random_circuit(arity, depth - 1, rng),
                                                random_circuit(arity, depth - 1, rng));
    case 3: return classical::BoolCircuit::lnot(random_circuit(arity, depth - 1, rng));
    default: return classical::BoolCircuit::input(arity, wire(rng));
    }
}

Verdict boolean_recovery() {
    Checker c;
    std::vector<Projector> basis;
    for (std::size_t i = 0; i < 4; ++i) basis.push_back(Projector::basis(4, i));
    const auto algebra = qcore::boolean_projections(basis);
    c.expect(algebra.size() == 16, "double commutant gave " + std::to_string(algebra.size()) +
                                       " projectors");

    const auto pl = omlattice::projection_oml(4, basis);
    c.expect(pl.lattice->size() == 16, "lattice has " + std::to_string(pl.lattice->size()) + " elements");
    for (const auto &p : algebra) {
        c.expect(omlattice::find_projector(pl, p).has_value(), "algebra projector missing from lattice");
    }
    for (const auto &law : omlattice::check_laws(*pl.lattice)) {
        c.expect(law.passed, "law '" + law.law + "' fails on the dim-4 Boolean algebra");
        c.expect(law.exhaustive, "law '" + law.law + "' was sampled");
    }

    Rng rng(0xac5);
    std::size_t rows = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 3;
        const std::size_t m = 1 + static_cast<std::size_t>(trial / 3) % 2;
        std::vector<classical::BoolCircuit> outs;
        for (std::size_t j = 0; j < m; ++j) outs.push_back(random_circuit(n, 3, rng));
        const auto u = logic::classical_embedding(outs);
        for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << n); ++xv) {
            const classical::BitString x(n, xv);
            const auto rho = logic::embedded_input(x, classical::BitString(m, 0));
            for (std::size_t j = 0; j < m; ++j) {
                const double tv = logic::truth_value(u, rho, logic::wire_event(n + m, n + j));
                const double expected = classical::eval_circuit(outs[j], x) ? 1.0 : 0.0;
                c.expect(tv == expected, outs[j].str() + " at x=" + x.str() + ": " + fmt(tv));
                ++rows;
            }
        }
    }
    return c.verdict("16 projectors, distributive ortholattice; " + std::to_string(rows) +
                     " embedded truth values exactly 0/1 and equal to classical evaluation");
}

// ---------------------------------------------------------------------------

Verdict lattice_battery() {
    Checker c;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto laws = omlattice::check_laws(*omlattice::boolean_oml(n));
        for (const auto &law : laws) {
            c.expect(law.passed, "bool" + std::to_string(n) + " fails " + law.law);
            c.expect(law.exhaustive, "bool" + std::to_string(n) + " sampled " + law.law);
        }
    }
    const auto mo2 = omlattice::mo2_lattice();
    const auto &l = *mo2.lattice;
    bool saw_om = false, saw_dist = false;
    std::string triple;
    for (const auto &law : omlattice::check_laws(l)) {
        if (law.law == "orthomodular") {
            saw_om = true;
            c.expect(law.passed, "MO2 fails orthomodularity");
        } else if (law.law == "distributive") {
            saw_dist = true;
            c.expect(!law.passed, "MO2 passes distributivity");
            c.expect(law.witness.size() == 3, "no witness triple");
            if (law.witness.size() == 3) {
                const auto a = law.witness[0], b = law.witness[1], d = law.witness[2];
                c.expect(l.meet(a, l.join(b, d)) != l.join(l.meet(a, b), l.meet(a, d)),
                         "witness triple does not violate distributivity");
                triple = "(" + l.name(a) + ", " + l.name(b) + ", " + l.name(d) + ")";
            }
        } else {
            c.expect(law.passed, "MO2 fails " + law.law);
        }
    }
    c.expect(saw_om && saw_dist, "battery is missing laws");
    return c.verdict("bool1..bool3 exhaustive incl. distributivity; MO2 orthomodular, "
                     "non-distributive at " + triple);
}

// ---------------------------------------------------------------------------

Verdict superposition_claims() {
    Checker c;
    std::size_t instances = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto l = omlattice::boolean_oml(n);
        const auto atoms = l->atoms();
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            const auto nu = omlattice::point_mass(l, atoms[a]);
            const std::size_t others = atoms.size() - 1;
            for (std::size_t mask = 0; mask < (std::size_t{1} << others); ++mask) {
                std::vector<omlattice::LatticeState> d;
                for (std::size_t k = 0, bit = 0; k < atoms.size(); ++k) {
                    if (k == a) continue;
                    if ((mask >> bit++) & 1U) d.push_back(omlattice::point_mass(l, atoms[k]));
                }
                const auto r = omlattice::is_superposition(nu, d);
                c.expect(!r.is_superposition, "point mass is a superposition of other point masses");
                c.expect(r.violation && nu.value(*r.violation) > 0.0, "no violating element reported");
                ++instances;
            }
        }
    }
    const auto mo2 = omlattice::mo2_lattice();
    const std::vector<omlattice::LatticeState> basis{
        omlattice::gleason_state(DensityOperator::basis_state(2, 0), mo2),
        omlattice::gleason_state(DensityOperator::basis_state(2, 1), mo2)};
    const auto plus = omlattice::gleason_state(
        DensityOperator::pure(Ket::Constant(2, 1.0 / std::sqrt(2.0))), mo2);
    c.expect(omlattice::is_superposition(plus, basis).is_superposition,
             "gleason(|+><+|) is not a superposition of the basis states");
    return c.verdict(std::to_string(instances) +
                     " Boolean instances with no superposition; MO2 |+> is a superposition");
}

// ---------------------------------------------------------------------------

Verdict cross_layer() {
    Checker c;
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    std::vector<Projector> rays;
    for (const auto &v : std::vector<std::vector<Complex>>{
             {1, 0}, {0, 1}, {s, s}, {s, -s}, {s, s * i}, {s, -s * i}}) {
        Ket k(2);
        k << v[0], v[1];
        rays.push_back(Projector::onto(k));
    }
    const auto pl = omlattice::projection_oml(2, rays, {"|0>", "|1>", "|+>", "|->", "|+i>", "|-i>"});
    c.expect(pl.lattice->size() == 8, "octahedron lattice has " + std::to_string(pl.lattice->size()) +
                                          " elements");

    const std::vector<gates::GateSpec> specs{{gates::GateKind::H, 0.0, {0}},
                                             {gates::GateKind::R, std::numbers::pi / 2, {0}},
                                             {gates::GateKind::X, 0.0, {0}},
                                             {gates::GateKind::Z, 0.0, {0}}};
    std::vector<omlattice::LatticeAutomorphism> generators;
    for (const auto &g : specs) generators.push_back(omlattice::unitary_automorphism(gates::elementary(g, 1), pl));

    Rng rng(0xac8);
    std::uniform_int_distribution<std::size_t> pick_gen(0, specs.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_len(0, 10);
    std::uniform_int_distribution<std::size_t> pick_elem(0, pl.lattice->size() - 1);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = testing::random_density(2, rng);
        omlattice::ComputationalScheme scheme{pl.lattice, {omlattice::gleason_state(rho, pl)},
                                              generators, 0};
        std::vector<std::size_t> word(pick_len(rng));
        gates::GateWord gw(1);
        for (auto &w : word) {
            w = pick_gen(rng);
            gw = gw.then(specs[w]);
        }
        std::vector<std::size_t> readout(1 + trial % 4);
        for (auto &r : readout) r = pick_elem(rng);
        const auto got = omlattice::run_protocol(scheme, word, readout);
        const auto u = gates::compose_word(gw);
        for (std::size_t k = 0; k < readout.size(); ++k) {
            const double expected = logic::truth_value(u, rho, pl.projectors[readout[k]]);
            const double d = std::abs(got[k] - expected);
            worst = std::max(worst, d);
            c.expect(d <= kTol, "trial " + std::to_string(trial) + " element " +
                                    pl.lattice->name(readout[k]) + ": " + fmt(got[k]) + " vs " +
                                    fmt(expected));
        }
    }
    return c.verdict("100 random words over {H, S, X, Z} on the octahedron lattice, worst deviation " +
                     fmt(worst));
}

// ---------------------------------------------------------------------------

Verdict kolmogorov_layer() {
    Checker c;
    Rng rng(0xac9);
    std::exponential_distribution<double> weight(1.0);
    std::bernoulli_distribution sparse(0.3);
    std::size_t tables = 0;
    double worst = 0.0;
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (int t = 0; t < 10; ++t) {
                std::vector<std::vector<double>> rows(std::size_t{1} << m);
                for (auto &row : rows) {
                    row.resize(std::size_t{1} << n);
                    double sum = 0.0;
                    for (auto &p : row) sum += (p = sparse(rng) ? 0.0 : weight(rng));
                    if (sum == 0.0) row[0] = sum = 1.0;
                    for (auto &p : row) p /= sum;
                }
                const auto f = classical::StochasticOutput::create(m, n, rows);
                ++tables;
                for (std::uint64_t x = 0; x < rows.size(); ++x) {
                    const auto r = classical::check_kolmogorov(f, classical::BitString(m, x), 256,
                                                               static_cast<std::uint64_t>(t));
                    worst = std::max(worst, r.max_violation());
                    c.expect(r.max_violation() <= kKolmogorovTol,
                             "violation " + fmt(r.max_violation()));
                }

                // Break one row's normalization and expect rejection.
                auto bad = rows;
                bad[0][0] += 1e-3;
                bool rejected = false;
                try {
                    (void)classical::StochasticOutput::create(m, n, bad);
                } catch (const ValidationFailure &e) {
                    rejected = e.invariant() == "normalization";
                }
                c.expect(rejected, "unnormalized row accepted");
            }
        }
    }
    return c.verdict(std::to_string(tables) + " random tables with M,N <= 3, worst violation " +
                     fmt(worst) + "; unnormalized rows rejected");
}

} // namespace

int main() {
    const std::pair<const char *, std::function<Verdict()>> criteria[] = {
        {"AC1 Deutsch-Jozsa exactness", deutsch_jozsa_exactness},
        {"AC2 period-finding spectrum", period_spectrum},
        {"AC3 equivalence hierarchy", equivalence_hierarchy},
        {"AC4 quantum probability axioms", quantum_axioms},
        {"AC5 Boolean recovery", boolean_recovery},
        {"AC6 lattice law battery", lattice_battery},
        {"AC7 superposition claims", superposition_claims},
        {"AC8 cross-layer consistency", cross_layer},
        {"AC9 Kolmogorov layer", kolmogorov_layer},
    };
    int failed = 0;
    for (const auto &[name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d/9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
