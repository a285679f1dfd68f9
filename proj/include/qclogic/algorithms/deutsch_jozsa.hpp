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

#include "qclogic/algorithms/oracle.hpp"
#include "qclogic/algorithms/run_result.hpp"

namespace qclogic::algorithms {

/// Two-qubit states after each step, first qubit leftmost.
struct DeutschJozsaTrace {
    qcore::Ket initial;        // |0>|1>
    qcore::Ket after_hadamard; // (H (x) H)|0>|1>
    qcore::Ket after_oracle;
    qcore::Ket final_state;    // after H on the first qubit
};

struct DeutschJozsaRun {
    /// Outcomes "0" and "1" of the first qubit; verdict "constant" or
    /// "balanced"; success is the probability of the correct verdict.
    RunResult result;
    DeutschJozsaTrace trace;
    bool constant = false;
};

/**
 * Deutsch's problem for a one-bit f. The outcome probabilities are the
 * Born values of |0><0| (x) 1 and |1><1| (x) 1 in the final density
 * operator; the verdict is "constant" when P(0) >= 1/2.
 * Throws WidthMismatch unless f maps one bit to one bit.
 */
DeutschJozsaRun deutsch_jozsa(const OracleFunction &f);

} // namespace qclogic::algorithms
