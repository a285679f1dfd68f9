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
#include <numbers>

#include "qclogic/gates/gates.hpp"
#include "qclogic/gates/word_format.hpp"
#include "support/naive.hpp"
#include "support/random.hpp"

namespace qclogic::gates {
namespace {

using qcore::Complex;
using testing::NaiveMatrix;

const double kS = 1.0 / std::sqrt(2.0);

// Hand-written matrices for the single-wire gates.
NaiveMatrix naive_h() { return {{kS, kS}, {kS, -kS}}; }
NaiveMatrix naive_t() { return {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}}; }
NaiveMatrix naive_x() { return {{0, 1}, {1, 0}}; }

double naive_distance(const qcore::ComplexMatrix &a, const NaiveMatrix &b) {
    return testing::naive_max_abs(testing::naive_sub(testing::naive(a), b));
}

TEST(LocalMatrix, Hadamard) {
    const auto h = elementary({GateKind::H, 0.0, {0}}, 1).matrix();
    EXPECT_LT(naive_distance(h, naive_h()), 1e-15);
    const auto hh = testing::naive_mul(testing::naive(h), testing::naive_adjoint(testing::naive(h)));
    EXPECT_LT(testing::naive_max_abs(testing::naive_sub(hh, testing::naive_identity(2))), 1e-15);
}

TEST(LocalMatrix, QftMatchesFourierEntries) {
    const auto f2 = qft_matrix(2);
    EXPECT_LT(naive_distance(f2, naive_h()), 1e-15);
    EXPECT_EQ(qft_matrix(1)(0, 0), Complex(1.0));
    for (std::size_t n : {4u, 8u}) {
        const auto f = qft_matrix(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Complex expected =
                    std::exp(Complex(0, 2 * std::numbers::pi * static_cast<double>(a * b) /
                                            static_cast<double>(n))) /
                    std::sqrt(static_cast<double>(n));
                EXPECT_LT(std::abs(f(a, b) - expected), 1e-12);
            }
    }
}

TEST(LocalMatrix, XXRotation) {
    const double phi = 0.7;
    const auto m = local_matrix({GateKind::XX, phi, {0, 1}});
    const auto x = testing::naive_kron(naive_x(), naive_x());
    NaiveMatrix expected = testing::naive_identity(4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            expected[r][c] = std::cos(phi / 2) * expected[r][c] - Complex(0, std::sin(phi / 2)) * x[r][c];
    EXPECT_LT(naive_distance(m, expected), 1e-15);
}

TEST(Elementary, WireZeroIsLeftmostFactor) {
    const auto h0 = elementary({GateKind::H, 0.0, {0}}, 2).matrix();
    EXPECT_LT(naive_distance(h0, testing::naive_kron(naive_h(), testing::naive_identity(2))), 1e-15);
    const auto h1 = elementary({GateKind::H, 0.0, {1}}, 2).matrix();
    EXPECT_LT(naive_distance(h1, testing::naive_kron(testing::naive_identity(2), naive_h())), 1e-15);
    // CNOT with the control on wire 1 flips wire 0.
    const auto c10 = elementary({GateKind::CNOT, 0.0, {1, 0}}, 2).matrix();
    EXPECT_EQ(c10(3, 1), Complex(1.0));
    EXPECT_EQ(c10(1, 3), Complex(1.0));
    EXPECT_EQ(c10(0, 0), Complex(1.0));
    EXPECT_EQ(c10(2, 2), Complex(1.0));
}

TEST(Elementary, ToffoliOnScatteredWiresIsPermutation) {
    const auto u = elementary({GateKind::Toffoli, 0.0, {3, 0, 2}}, 4).matrix();
    for (std::size_t col = 0; col < 16; ++col) {
        const bool c1 = (col >> 0) & 1U, c2 = (col >> 3) & 1U;
        const std::size_t row = (c1 && c2) ? col ^ 2U : col;
        EXPECT_EQ(u(row, col), Complex(1.0)) << col;
    }
}

TEST(Elementary, Errors) {
    auto kind_of = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind_of([] { (void)elementary({GateKind::H, 0.0, {2}}, 2); }), ErrorKind::InvalidWire);
    EXPECT_EQ(kind_of([] { (void)elementary({GateKind::CNOT, 0.0, {1, 1}}, 2); }),
              ErrorKind::InvalidWire);
    EXPECT_EQ(kind_of([] { (void)gate_kind_from_name("SWAP"); }), ErrorKind::UnknownGate);
    EXPECT_EQ(gate_kind_from_name("cx"), GateKind::CNOT);
}

TEST(ComposeWord, Examples) {
    EXPECT_TRUE(qcore::approx_equal(compose_word(GateWord(1)).matrix(),
                                    qcore::ComplexMatrix::identity(2), 0.0));
    const GateWord hh(1, {{GateKind::H, 0.0, {0}}, {GateKind::H, 0.0, {0}}});
    EXPECT_LT(naive_distance(compose_word(hh).matrix(), testing::naive_identity(2)), 1e-15);
}

TEST(ComposeWord, LaterGatesMultiplyOnTheLeft) {
    const GateWord ht(1, {{GateKind::H, 0.0, {0}}, {GateKind::T, 0.0, {0}}});
    EXPECT_LT(naive_distance(compose_word(ht).matrix(), testing::naive_mul(naive_t(), naive_h())), 1e-15);
}

TEST(ComposeWord, RandomWordsAgreeWithNaiveProducts) {
    testing::Rng rng(21);
    const auto specs = instantiate(GeneratorSet::g2({0.3, 1.1}), 3);
    std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        GateWord w(3);
        NaiveMatrix expected = testing::naive_identity(8);
        for (int k = 0; k < 5; ++k) {
            const auto &s = specs[pick(rng)];
            w = w.then(s);
            expected = testing::naive_mul(testing::naive(elementary(s, 3).matrix()), expected);
        }
        EXPECT_LT(naive_distance(compose_word(w).matrix(), expected), 1e-12);
    }
}

TEST(Enumerate, Counts) {
    const auto g1 = GeneratorSet::g1();
    const auto one = enumerate_polynomials(g1, 1, 1);
    ASSERT_EQ(one.size(), 3u);
    EXPECT_TRUE(one[0].empty());
    EXPECT_EQ(enumerate_polynomials(g1, 1, 2).size(), 7u);

    const auto g2 = enumerate_polynomials(GeneratorSet::g2({std::numbers::pi / 2}), 2, 1);
    EXPECT_EQ(g2.size(), 7u);
    EXPECT_THROW(enumerate_polynomials(g1, 1, 20, 1000), Error);
    EXPECT_THROW(enumerate_polynomials(GeneratorSet::g3({}), 2, 1), Error);
}

TEST(Enumerate, OrderedByLengthThenLexicographic) {
    const auto words = enumerate_polynomials(GeneratorSet::g1(), 1, 2);
    std::vector<std::string> text;
    for (const auto &w : words) text.push_back(format_word(w));
    EXPECT_EQ(text, (std::vector<std::string>{"width=1", "width=1; H[0]", "width=1; T[0]",
                                              "width=1; H[0]; H[0]", "width=1; H[0]; T[0]",
                                              "width=1; T[0]; H[0]", "width=1; T[0]; T[0]"}));
}

TEST(ToffoliTruthValue, Examples) {
    const auto one = qcore::DensityOperator::basis_state(2, 1);
    const auto zero = qcore::DensityOperator::basis_state(2, 0);
    EXPECT_NEAR(toffoli_truth_value(one, one), 1.0, 1e-12);
    testing::Rng rng(4);
    EXPECT_NEAR(toffoli_truth_value(zero, testing::random_density(2, rng)), 0.0, 1e-12);
    const auto plus = qcore::DensityOperator::pure(qcore::Ket::Constant(2, kS));
    EXPECT_NEAR(toffoli_truth_value(plus, plus), 0.25, 1e-12);

    // Oracle: the probability that both control bits read 1.
    const auto rho = testing::random_density(2, rng);
    const auto sigma = testing::random_density(2, rng);
    EXPECT_NEAR(toffoli_truth_value(rho, sigma),
                rho.matrix()(1, 1).real() * sigma.matrix()(1, 1).real(), 1e-12);
}

TEST(WordFormat, ParseAndFormat) {
    const auto w = parse_word("H[0]; CNOT[0,1]\nR(0.5)[1]");
    EXPECT_EQ(w.width(), 2u);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w.gates()[2].param, 0.5);
    EXPECT_EQ(parse_word(format_word(w)), w);
    EXPECT_EQ(parse_word("").width(), 1u);
    EXPECT_EQ(parse_word("width=3; H").width(), 3u);
    EXPECT_EQ(format_word(parse_word("H;H")), "width=1; H[0]; H[0]");
    EXPECT_THROW(parse_word("R[0]"), Error);
    EXPECT_THROW(parse_word("H[0"), Error);
    EXPECT_THROW(parse_word("FOO[0]"), Error);
}

} // namespace
} // namespace qclogic::gates
