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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qclogic/error.hpp"
#include "qclogic/json_format.hpp"

namespace qclogic::algorithms {

/// Probabilities at or below this are left out of JSON distributions.
inline constexpr double kReportedProbabilityFloor = 1e-12;

/// Outcome of an algorithm run: outcomes in ascending order with their
/// probabilities, the probability that the run reaches the right answer,
/// and the algorithm's conclusion.
struct RunResult {
    std::vector<std::pair<std::string, double>> distribution;
    double success_probability = 0.0;
    std::string verdict;

    /// Probability of one outcome; throws UnknownOutcome.
    [[nodiscard]] double probability(const std::string &outcome) const;
};

/// Sum of the probabilities of `event`. Throws UnknownOutcome for labels not
/// in the distribution.
double success_probability(const RunResult &result, std::span<const std::string> event);

/// {"distribution": {outcome: p}, "success_probability", "verdict"}
Json run_result_to_json(const RunResult &result);

} // namespace qclogic::algorithms
