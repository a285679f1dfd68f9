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

#include "qclogic/algorithms/run_result.hpp"

namespace qclogic::algorithms {

double RunResult::probability(const std::string &outcome) const {
    for (const auto &[label, p] : distribution) {
        if (label == outcome) return p;
    }
    fail(ErrorKind::UnknownOutcome, "no outcome '" + outcome + "'");
}

double success_probability(const RunResult &result, std::span<const std::string> event) {
    double total = 0.0;
    for (const auto &outcome : event) {
        total += result.probability(outcome);
    }
    return total;
}

Json run_result_to_json(const RunResult &result) {
    Json dist = Json::object();
    for (const auto &[label, p] : result.distribution) {
        if (p > kReportedProbabilityFloor) dist[label] = p;
    }
    return {{"distribution", std::move(dist)},
            {"success_probability", result.success_probability},
            {"verdict", result.verdict}};
}

} // namespace qclogic::algorithms
