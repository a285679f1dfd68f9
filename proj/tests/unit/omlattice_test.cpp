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

#include <gtest/gtest.h>

#include <cmath>

#include "qclogic/gates/word_format.hpp"
#include "qclogic/omlattice/lattice_json.hpp"
#include "qclogic/omlattice/projection.hpp"
#include "qclogic/omlattice/scheme.hpp"
#include "support/random.hpp"

namespace qclogic::omlattice {
namespace {

using qcore::DensityOperator;
using qcore::Ket;
using qcore::Projector;
using qcore::UnitaryGate;

const double kS = 1.0 / std::sqrt(2.0);

UnitaryGate word(const char *text) { return gates::compose_word(gates::parse_word(text)); }

const LawResult &law(const std::vector<LawResult> &laws, const std::string &name) {
    for (const auto &l : laws)
        if (l.law == name) return l;
    throw std::runtime_error("missing law " + name);
}

TEST(BooleanOml, Structure) {
    const auto b1 = boolean_oml(1);
    ASSERT_EQ(b1->size(), 4u);
    EXPECT_EQ(b1->name(b1->zero()), "{}");
    EXPECT_EQ(b1->name(1), "{0}");
    EXPECT_EQ(b1->name(2), "{1}");
    EXPECT_EQ(b1->name(b1->one()), "{0,1}");
    EXPECT_EQ(b1->index_of("{1}"), 2u);
    EXPECT_EQ(boolean_oml(2)->size(), 16u);
    EXPECT_EQ(boolean_oml(2)->atoms().size(), 4u);
    EXPECT_THROW(boolean_oml(5), Error);
}

TEST(BooleanOml, AllLawsIncludingDistributivity) {
    for (std::size_t n = 1; n <= 2; ++n) {
        for (const auto &l : check_laws(*boolean_oml(n))) {
            EXPECT_TRUE(l.passed) << l.law;
            EXPECT_TRUE(l.exhaustive) << l.law;
        }
    }
}

TEST(ProjectionOml, DiagonalIsBoolean) {
    const auto d = diagonal_lattice(1);
    EXPECT_EQ(d.lattice->size(), 4u);
    EXPECT_TRUE(law(check_laws(*d.lattice), "distributive").passed);
}

TEST(ProjectionOml, Mo2FailsDistributivity) {
    const auto mo2 = mo2_lattice();
    const auto &l = *mo2.lattice;
    ASSERT_EQ(l.size(), 6u);
    const auto laws = check_laws(l);
    EXPECT_TRUE(law(laws, "orthomodular").passed);
    const auto &dist = law(laws, "distributive");
    EXPECT_FALSE(dist.passed);
    ASSERT_EQ(dist.witness.size(), 3u);
    const auto [a, b, c] = std::tuple{dist.witness[0], dist.witness[1], dist.witness[2]};
    EXPECT_NE(l.meet(a, l.join(b, c)), l.join(l.meet(a, b), l.meet(a, c)));

    // The triple named in the documentation.
    const auto z = l.index_of("|0>"), p = l.index_of("|+>"), m = l.index_of("|->");
    EXPECT_EQ(l.meet(z, l.join(p, m)), z);
    EXPECT_EQ(l.join(l.meet(z, p), l.meet(z, m)), l.zero());
}

TEST(ProjectionOml, MeetAndJoinAreSubspaceOperations) {
    const auto p0 = Projector::basis(2, 0);
    const auto plus = Projector::onto(Ket::Constant(2, kS));
    EXPECT_LT(projector_meet(p0, plus).matrix().max_abs(), 1e-9);
    EXPECT_LT(qcore::distance(projector_join(p0, plus).matrix(), qcore::ComplexMatrix::identity(2)), 1e-9);

    testing::Rng rng(17);
    const auto fam = testing::random_orthogonal_family(4, {1, 2}, rng);
    const auto j = projector_join(fam[0], fam[1]);
    EXPECT_LT(qcore::distance(j.matrix(), fam[0].matrix() + fam[1].matrix()), 1e-9);
    EXPECT_LT(projector_meet(fam[0], fam[1]).matrix().max_abs(), 1e-9);
}

TEST(ProjectionOml, ClosureCap) {
    testing::Rng rng(3);
    std::vector<Projector> gens;
    for (int i = 0; i < 6; ++i) gens.push_back(testing::random_projector(2, 1, rng));
    try {
        (void)projection_oml(2, gens, {}, 4);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ClosureCapExceeded);
    }
}

TEST(GleasonState, Examples) {
    const auto mo2 = mo2_lattice();
    const auto mixed = gleason_state(DensityOperator::maximally_mixed(2), mo2);
    for (const auto a : mo2.lattice->atoms()) EXPECT_NEAR(mixed.value(a), 0.5, 1e-12);
    const auto zero = gleason_state(DensityOperator::basis_state(2, 0), mo2);
    EXPECT_NEAR(zero.value(mo2.lattice->index_of("|0>")), 1.0, 1e-12);
    EXPECT_NEAR(zero.value(mo2.lattice->index_of("|1>")), 0.0, 1e-12);
}

TEST(UnitaryAutomorphism, Examples) {
    const auto mo2 = mo2_lattice();
    const auto &l = *mo2.lattice;
    const auto id = unitary_automorphism(UnitaryGate::identity(2), mo2);
    for (std::size_t x = 0; x < l.size(); ++x) EXPECT_EQ(id(x), x);

    const auto h = unitary_automorphism(word("H"), mo2);
    EXPECT_EQ(h(l.index_of("|0>")), l.index_of("|+>"));
    EXPECT_EQ(h(l.index_of("|1>")), l.index_of("|->"));
    EXPECT_EQ(h(l.index_of("|+>")), l.index_of("|0>"));

    const auto diag = diagonal_lattice(1);
    const auto x = unitary_automorphism(word("X"), diag);
    EXPECT_EQ(x(diag.lattice->index_of("|0>")), diag.lattice->index_of("|1>"));

    try {
        (void)unitary_automorphism(word("T"), mo2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotClosedUnderConjugation);
    }
}

TEST(Pushforward, Examples) {
    const auto mo2 = mo2_lattice();
    const auto nu = gleason_state(DensityOperator::basis_state(2, 0), mo2);
    EXPECT_EQ(pushforward(LatticeAutomorphism::identity(mo2.lattice), nu).values(), nu.values());
    const auto pushed = pushforward(unitary_automorphism(word("H"), mo2), nu);
    EXPECT_NEAR(pushed.value(mo2.lattice->index_of("|0>")), 0.5, 1e-12);
    // Agreement with the Born rule after conjugation.
    const auto rho = qcore::conjugate(word("H"), DensityOperator::basis_state(2, 0));
    for (std::size_t x = 0; x < mo2.lattice->size(); ++x)
        EXPECT_NEAR(pushed.value(x), qcore::born(rho, mo2.projectors[x]), 1e-12);
}

TEST(LatticeState, ValidationNamesTheLaw) {
    const auto b1 = boolean_oml(1);
    try {
        (void)LatticeState::create(b1, {0.0, 0.3, 0.3, 1.0});
        FAIL();
    } catch (const ValidationFailure &e) {
        EXPECT_EQ(e.invariant(), "additivity");
    }
    EXPECT_THROW((void)LatticeState::create(b1, {0.1, 0.5, 0.5, 1.0}), ValidationFailure);
    EXPECT_THROW((void)LatticeState::create(b1, {0.0, 1.5, -0.5, 1.0}), ValidationFailure);
}

TEST(Generalized, EquivAndLeq) {
    const auto diag = diagonal_lattice(1);
    const auto &l = *diag.lattice;
    const std::vector<LatticeAutomorphism> id{LatticeAutomorphism::identity(diag.lattice)};
    const std::vector<LatticeAutomorphism> x{unitary_automorphism(word("X"), diag)};
    const auto uniform = gleason_state(DensityOperator::maximally_mixed(2), diag);
    const auto zero = gleason_state(DensityOperator::basis_state(2, 0), diag);

    EXPECT_TRUE(generalized_equiv(x, x, zero, std::nullopt).holds);
    EXPECT_TRUE(generalized_equiv(id, x, uniform, std::nullopt).holds);
    const auto r = generalized_equiv(id, x, zero, std::nullopt);
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.element.has_value());
    EXPECT_EQ(*r.element, l.index_of("|0>"));

    EXPECT_TRUE(generalized_leq(id, x, zero, l.one()).holds);
    EXPECT_TRUE(generalized_leq(id, x, zero, l.index_of("|1>")).holds);
    EXPECT_FALSE(generalized_leq(id, x, zero, l.index_of("|0>")).holds);

    const std::vector<LatticeState> both{uniform, zero};
    EXPECT_FALSE(generalized_equiv_all(id, x, both, std::nullopt).holds);
    EXPECT_TRUE(generalized_leq_all(id, id, both, std::nullopt).holds);
}

TEST(Superposition, Examples) {
    const auto b1 = boolean_oml(1);
    const auto a = point_mass(b1, 1);
    const auto b = point_mass(b1, 2);
    const std::vector<LatticeState> da{a};
    EXPECT_TRUE(is_superposition(a, da).is_superposition);
    const auto r = is_superposition(b, da);
    EXPECT_FALSE(r.is_superposition);
    EXPECT_EQ(r.violation, std::optional<std::size_t>(2));

    const auto mo2 = mo2_lattice();
    const std::vector<LatticeState> basis{gleason_state(DensityOperator::basis_state(2, 0), mo2),
                                          gleason_state(DensityOperator::basis_state(2, 1), mo2)};
    const auto plus = gleason_state(DensityOperator::pure(Ket::Constant(2, kS)), mo2);
    EXPECT_TRUE(is_superposition(plus, basis).is_superposition);
}

TEST(PointAutomorphism, MovesPointMasses) {
    const auto b2 = boolean_oml(2);
    const std::vector<std::size_t> f{1, 2, 3, 0};
    const auto u = point_automorphism(b2, f);
    for (std::size_t p = 0; p < 4; ++p) {
        const auto pushed = pushforward(u, point_mass(b2, std::size_t{1} << p));
        EXPECT_EQ(pushed.values(), point_mass(b2, std::size_t{1} << f[p]).values());
    }
}

TEST(RunProtocol, Examples) {
    const auto diag = diagonal_lattice(1);
    const auto &l = *diag.lattice;
    ComputationalScheme scheme{diag.lattice,
                               {gleason_state(DensityOperator::basis_state(2, 0), diag)},
                               {unitary_automorphism(word("X"), diag)},
                               0};
    const std::vector<std::size_t> readout{l.index_of("|0>"), l.index_of("|1>")};
    EXPECT_EQ(run_protocol(scheme, {}, readout), (std::vector<double>{1.0, 0.0}));
    const std::vector<std::size_t> one_x{0};
    const auto out = run_protocol(scheme, one_x, readout);
    EXPECT_NEAR(out[0], 0.0, 1e-12);
    EXPECT_NEAR(out[1], 1.0, 1e-12);
    const std::vector<std::size_t> bad{3};
    EXPECT_THROW((void)run_protocol(scheme, bad, readout), Error);
}

TEST(LatticeJson, RoundTripAndCorruption) {
    const auto mo2 = mo2_lattice();
    const auto j = lattice_to_json(*mo2.lattice);
    const auto back = lattice_from_json(j);
    EXPECT_EQ(back->size(), 6u);
    EXPECT_EQ(dump_report(lattice_to_json(*back)), dump_report(j));

    auto bad = j;
    bad["ortho"]["|0>"] = "|+>";
    bad["ortho"]["|+>"] = "|0>";
    try {
        (void)lattice_from_json(bad);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::LawViolation);
    }
    EXPECT_NE(builtin_lattice("bool2"), nullptr);
    EXPECT_THROW(builtin_lattice("nope"), Error);
}

} // namespace
} // namespace qclogic::omlattice
