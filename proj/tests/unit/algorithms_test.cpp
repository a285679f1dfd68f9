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

#include "qclogic/algorithms/deutsch_jozsa.hpp"
#include "qclogic/algorithms/period.hpp"
#include "qclogic/gates/gates.hpp"
#include "support/naive.hpp"

namespace qclogic::algorithms {
namespace {

using qcore::Complex;

TEST(Oracle, Matrices) {
    const auto zero = build_oracle(OracleFunction::one_bit(3));
    EXPECT_TRUE(qcore::approx_equal(zero.matrix(), qcore::ComplexMatrix::identity(4), 0.0));
    const auto cnot = gates::elementary({gates::GateKind::CNOT, 0.0, {0, 1}}, 2);
    EXPECT_TRUE(qcore::approx_equal(build_oracle(OracleFunction::one_bit(1)).matrix(),
                                    cnot.matrix(), 0.0));
    EXPECT_THROW(OracleFunction::create(1, 1, {0, 2}), Error);
    EXPECT_THROW(OracleFunction::create(2, 1, {0, 1}), Error);
    EXPECT_THROW((void)build_oracle(OracleFunction::one_bit(1), 0), Error);
}

TEST(Oracle, Json) {
    const auto f = OracleFunction::from_json(Json::parse(R"({"n":1,"m":1,"table":{"0":"1","1":"1"}})"));
    EXPECT_EQ(f.table(), OracleFunction::one_bit(4).table());
    EXPECT_EQ(OracleFunction::from_json(f.to_json()).table(), f.table());
    EXPECT_THROW(OracleFunction::from_json(Json::parse(R"({"n":1,"m":1,"table":{"0":"1"}})")), Error);
}

TEST(DeutschJozsa, Examples) {
    const auto constant = deutsch_jozsa(OracleFunction::one_bit(3));
    EXPECT_TRUE(constant.constant);
    EXPECT_EQ(constant.result.verdict, "constant");
    EXPECT_NEAR(constant.result.probability("0"), 1.0, 1e-12);
    EXPECT_NEAR(constant.result.success_probability, 1.0, 1e-12);

    const auto balanced = deutsch_jozsa(OracleFunction::one_bit(1));
    EXPECT_EQ(balanced.result.verdict, "balanced");
    EXPECT_NEAR(balanced.result.probability("1"), 1.0, 1e-12);
    EXPECT_THROW((void)balanced.result.probability("2"), Error);

    const std::vector<std::string> first_zero{"0"};
    EXPECT_NEAR(success_probability(constant.result, first_zero), 1.0, 1e-12);
    EXPECT_EQ(success_probability(constant.result, {}), 0.0);
}

TEST(DeutschJozsa, TraceMatchesHandComputation) {
    const auto run = deutsch_jozsa(OracleFunction::one_bit(2));
    // (H (x) H)|0>|1> = (|00> - |01> + |10> - |11>) / 2
    const std::vector<double> after_h{0.5, -0.5, 0.5, -0.5};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(run.trace.after_hadamard(i) - after_h[i]), 0.0, 1e-12);
    // f2 = not: (-1)^{f(0)} (|0> - |1>)(|0> - |1>) / 2 with f(0) = 1.
    const std::vector<double> after_o{-0.5, 0.5, 0.5, -0.5};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(run.trace.after_oracle(i) - after_o[i]), 0.0, 1e-12);
}

TEST(Qft, SmallSizes) {
    EXPECT_EQ(qft(1).matrix()(0, 0), Complex(1.0));
    const double s = 1.0 / std::sqrt(2.0);
    const testing::NaiveMatrix h{{s, s}, {s, -s}};
    EXPECT_LT(testing::naive_max_abs(testing::naive_sub(testing::naive(qft(2).matrix()), h)), 1e-15);
}

double prob(const RunResult &r, std::size_t c) { return r.probability(std::to_string(c)); }

TEST(Period, Examples) {
    const auto r42 = period_find(PeriodicSpec::canonical(4, 2));
    EXPECT_NEAR(prob(r42.result, 0), 0.5, 1e-12);
    EXPECT_NEAR(prob(r42.result, 2), 0.5, 1e-12);
    EXPECT_NEAR(prob(r42.result, 1), 0.0, 1e-12);
    EXPECT_NEAR(r42.result.success_probability, 0.5, 1e-12);

    const auto r84 = period_find(PeriodicSpec::canonical(8, 4));
    for (std::size_t c = 0; c < 8; ++c) EXPECT_NEAR(prob(r84.result, c), c % 2 == 0 ? 0.25 : 0.0, 1e-12);
    EXPECT_NEAR(r84.result.success_probability, 0.5, 1e-12);

    const auto r1 = period_find(PeriodicSpec::canonical(8, 1));
    EXPECT_NEAR(prob(r1.result, 0), 1.0, 1e-12);
    EXPECT_EQ(r1.estimated_period, 1u);
    EXPECT_EQ(r1.result.verdict, "r=1");
}

TEST(Period, BranchAmplitudesFollowTheClosedForm) {
    const std::size_t n = 16, r = 4;
    PeriodOptions opts;
    opts.mode = PeriodMode::Branching;
    for (std::uint64_t y0 = 0; y0 < r; ++y0) {
        opts.y0 = y0;
        const auto run = period_find(PeriodicSpec::canonical(n, r), opts);
        ASSERT_EQ(run.branches.size(), 1u);
        const auto &b = run.branches[0];
        EXPECT_EQ(b.x0, y0);
        for (std::size_t c = 0; c < n; ++c) {
            Complex expected = 0.0;
            if (c % (n / r) == 0) {
                const double j = static_cast<double>(c / (n / r));
                expected = std::exp(Complex(0, 2 * std::numbers::pi * static_cast<double>(b.x0) * j /
                                                   static_cast<double>(r))) /
                           std::sqrt(static_cast<double>(r));
            }
            EXPECT_LT(std::abs(b.transformed(static_cast<Eigen::Index>(c)) - expected), 1e-12);
        }
    }
}

TEST(Period, Validation) {
    EXPECT_THROW(PeriodicSpec::canonical(6, 3), Error);
    EXPECT_NO_THROW(PeriodicSpec::canonical(6, 3, false));
    EXPECT_THROW(PeriodicSpec::canonical(8, 3, false), Error);
    PeriodicSpec repeated{4, 2, {0, 0, 0, 0}};
    EXPECT_THROW(repeated.validate(), Error);
    PeriodOptions opts;
    opts.mode = PeriodMode::Branching;
    opts.y0 = 7;
    EXPECT_THROW(period_find(PeriodicSpec::canonical(4, 2), opts), Error);
}

TEST(RunResult, JsonDropsNegligibleOutcomes) {
    const auto run = period_find(PeriodicSpec::canonical(4, 2));
    const auto j = run_result_to_json(run.result);
    EXPECT_EQ(j["distribution"].size(), 2u);
    EXPECT_EQ(j["verdict"], run.result.verdict);
}

} // namespace
} // namespace qclogic::algorithms
