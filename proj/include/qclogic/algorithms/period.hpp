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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qclogic/algorithms/run_result.hpp"
#include "qclogic/qcore/operators.hpp"

namespace qclogic::algorithms {

/// Largest modulus period_find will simulate.
inline constexpr std::size_t kMaxPeriodModulus = 1024;
/// Cap on N * (max f + 1), the size of the joint state vector.
inline constexpr std::size_t kMaxPeriodStateSize = std::size_t{1} << 16;

/// f on Z_N with period r, N = K r, and f injective within one period.
struct PeriodicSpec {
    std::size_t N = 0;
    std::size_t r = 0;
    std::vector<std::uint64_t> f;

    /// Throws InvalidSpec when r does not divide N, N is not a power of two
    /// (unless allowed), f has the wrong length, is not r-periodic, or
    /// repeats a value within a period.
    void validate(bool require_power_of_two = true) const;

    /// {"N": 8, "r": 4, "f": [0, 1, 2, 3, 0, 1, 2, 3]}; when "f" is omitted
    /// f(x) = x mod r. Throws ParseError or InvalidSpec.
    static PeriodicSpec from_json(const Json &j, bool require_power_of_two = true);
    /// f(x) = x mod r.
    static PeriodicSpec canonical(std::size_t n, std::size_t r, bool require_power_of_two = true);
    [[nodiscard]] Json to_json() const;
};

enum class PeriodMode {
    /// Trace out the second register (the y0-independent distribution).
    Mixture,
    /// Condition on each y0 in turn and weight by its probability.
    Branching,
};

struct PeriodOptions {
    PeriodMode mode = PeriodMode::Mixture;
    /// Branching mode only: report just this measured value.
    std::optional<std::uint64_t> y0;
    /// Samples drawn for the gcd estimate of r.
    std::size_t samples = 8;
    std::uint64_t seed = 0x5eed;
    bool require_power_of_two = true;
};

struct PeriodBranch {
    std::uint64_t y0 = 0;
    double probability = 0.0;
    std::size_t x0 = 0;
    /// (1/sqrt K) sum_k |x0 + k r>
    qcore::Ket conditional;
    /// QFT applied to `conditional`.
    qcore::Ket transformed;
};

struct PeriodRun {
    /// Outcomes "0".."N-1"; success is the probability that one sample c
    /// equals j N / r with gcd(j, r) = 1; verdict "r=<estimate>".
    RunResult result;
    std::vector<PeriodBranch> branches;
    std::vector<std::size_t> samples;
    std::size_t estimated_period = 0;
};

/// Throws InvalidSpec.
PeriodRun period_find(const PeriodicSpec &spec, const PeriodOptions &options = {});

/// N x N QFT, F_ab = exp(2 pi i a b / N) / sqrt N, as a validated unitary.
/// Throws InvalidArgument for N = 0.
qcore::UnitaryGate qft(std::size_t n);

} // namespace qclogic::algorithms
