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

#include <array>

#include "qclogic/classical/circuit.hpp"
#include "qclogic/classical/stochastic.hpp"

namespace qclogic::classical {
namespace {

TEST(BoolGates, TruthTables) {
    const std::array<bool, 2> zero_one{false, true};
    const std::array<bool, 2> one_one{true, true};
    const std::array<bool, 1> zero{false};
    EXPECT_TRUE(eval_gate(BoolGate::Or, zero_one));
    EXPECT_TRUE(eval_gate(BoolGate::And, one_one));
    EXPECT_FALSE(eval_gate(BoolGate::And, zero_one));
    EXPECT_TRUE(eval_gate(BoolGate::Not, zero));
    EXPECT_THROW((void)eval_gate(BoolGate::Not, zero_one), Error);
}

TEST(Circuit, Evaluation) {
    const auto x0 = BoolCircuit::input(1, 0);
    EXPECT_FALSE(eval_circuit(BoolCircuit::lnot(x0), BitString::parse("1")));
    const auto taut = BoolCircuit::lor(x0, BoolCircuit::lnot(x0));
    EXPECT_TRUE(eval_circuit(taut, BitString::parse("0")));
    EXPECT_TRUE(eval_circuit(taut, BitString::parse("1")));
    EXPECT_THROW((void)eval_circuit(taut, BitString::parse("01")), Error);
}

TEST(Circuit, ParseAndPrint) {
    const auto c = parse_circuit("(or (not x0) (and x0 x1))");
    EXPECT_EQ(c.arity(), 2u);
    EXPECT_EQ(c.str(), "(or (not x0) (and x0 x1))");
    EXPECT_EQ(parse_circuit(c.str()).str(), c.str());
    EXPECT_EQ(parse_circuit("x1", 4).arity(), 4u);
    EXPECT_THROW(parse_circuit("(xor x0 x1)"), Error);
    EXPECT_THROW(parse_circuit("(and x0"), Error);
    EXPECT_THROW(parse_circuit("x3", 2), Error);
}

TEST(BitString, OrderingAndText) {
    const BitString b(3, 0b011);
    EXPECT_EQ(b.str(), "011");
    EXPECT_FALSE(b[0]);
    EXPECT_TRUE(b[2]);
    EXPECT_LT(BitString::parse("001"), BitString::parse("010"));
    EXPECT_THROW(BitString::parse("012"), Error);
}

TEST(EqualFunctions, Examples) {
    const auto f = parse_circuit("(and x0 x1)");
    EXPECT_TRUE(equal_functions(f, f).equal);

    const auto lhs = parse_circuit("(not (and x0 x1))");
    const auto rhs = parse_circuit("(or (not x0) (not x1))");
    EXPECT_TRUE(equal_functions(lhs, rhs).equal);

    const auto result = equal_functions(parse_circuit("(or x0 x1)"), parse_circuit("(and x0 x1)"));
    EXPECT_FALSE(result.equal);
    ASSERT_TRUE(result.witness.has_value());
    EXPECT_EQ(result.witness->str(), "01");
}

TEST(InducedMeasure, Examples) {
    const auto uniform = StochasticOutput::create(1, 2, {{0.25, 0.25, 0.25, 0.25},
                                                         {1.0, 0.0, 0.0, 0.0}});
    const BitString x(1, 0);
    EXPECT_EQ(induced_measure(uniform, x, EventSubset::empty(2)), 0.0);
    EXPECT_EQ(induced_measure(uniform, x, EventSubset::full(2)), 1.0);
    const EventSubset a(2, {BitString::parse("00"), BitString::parse("11")});
    EXPECT_DOUBLE_EQ(induced_measure(uniform, x, a), 0.5);
    EXPECT_THROW((void)induced_measure(uniform, x, EventSubset::full(3)), Error);
}

TEST(Stochastic, RejectsBadRows) {
    try {
        (void)StochasticOutput::create(0, 1, {{0.4, 0.5}});
        FAIL();
    } catch (const ValidationFailure &e) {
        EXPECT_EQ(e.invariant(), "normalization");
        EXPECT_NEAR(e.magnitude(), 0.1, 1e-12);
    }
    EXPECT_THROW((void)StochasticOutput::create(0, 1, {{1.2, -0.2}}), ValidationFailure);
    EXPECT_THROW((void)StochasticOutput::create(1, 1, {{1.0, 0.0}}), ValidationFailure);
}

TEST(Kolmogorov, DeterministicTableIsExact) {
    const std::vector<BoolCircuit> outs{parse_circuit("(and x0 x1)"), parse_circuit("(or x0 x1)")};
    const auto f = StochasticOutput::deterministic(outs);
    for (std::uint64_t xv = 0; xv < 4; ++xv) {
        const BitString x(2, xv);
        // Brute force over all pairs of subsets of {0,1}^2.
        for (unsigned a = 0; a < 16; ++a) {
            std::vector<BitString> am;
            for (unsigned y = 0; y < 4; ++y)
                if (a >> y & 1U) am.emplace_back(2, y);
            const EventSubset sa(2, am);
            const double mu = induced_measure(f, x, sa);
            EXPECT_TRUE(mu == 0.0 || mu == 1.0);
            for (unsigned b = 0; b < 16; ++b) {
                if ((a & b) != 0) continue;
                std::vector<BitString> bm;
                for (unsigned y = 0; y < 4; ++y)
                    if (b >> y & 1U) bm.emplace_back(2, y);
                const EventSubset sb(2, bm);
                EXPECT_EQ(induced_measure(f, x, sa.united(sb)),
                          mu + induced_measure(f, x, sb));
            }
        }
        EXPECT_EQ(check_kolmogorov(f, x, 200, 1).max_violation(), 0.0);
    }
}

TEST(Stochastic, JsonRoundTripAndSampling) {
    const auto j = Json::parse(R"({"M":1,"N":1,"rows":{"0":[0.25,0.75],"1":[1,0]}})");
    const auto f = stochastic_from_json(j);
    EXPECT_EQ(stochastic_to_json(stochastic_from_json(stochastic_to_json(f))), stochastic_to_json(f));
    const auto draws = sample_outputs(f, BitString(1, 1), 50, 9);
    for (const auto &d : draws) EXPECT_EQ(d.str(), "0");
    EXPECT_EQ(sample_outputs(f, BitString(1, 0), 20, 4), sample_outputs(f, BitString(1, 0), 20, 4));
}

} // namespace
} // namespace qclogic::classical
