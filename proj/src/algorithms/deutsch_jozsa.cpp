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

#include "qclogic/algorithms/deutsch_jozsa.hpp"

#include "qclogic/gates/gates.hpp"

namespace qclogic::algorithms {

DeutschJozsaRun deutsch_jozsa(const OracleFunction &f) {
    if (f.n() != 1 || f.m() != 1) {
        fail(ErrorKind::WidthMismatch, "Deutsch-Jozsa takes a one-bit function of one bit");
    }
    using gates::GateKind;
    const auto hh = gates::elementary({GateKind::H, 0.0, {0}}, 2) *
                    gates::elementary({GateKind::H, 0.0, {1}}, 2);
    const auto oracle = build_oracle(f, 1);
    const auto h_first = gates::elementary({GateKind::H, 0.0, {0}}, 2);

    DeutschJozsaRun run;
    run.trace.initial = qcore::basis_ket(4, 1);
    run.trace.after_hadamard = hh.matrix().eigen() * run.trace.initial;
    run.trace.after_oracle = oracle.matrix().eigen() * run.trace.after_hadamard;
    run.trace.final_state = h_first.matrix().eigen() * run.trace.after_oracle;

    // The measured statistics come from the density-operator pipeline.
    const auto circuit = h_first * oracle * hh;
    const auto rho = qcore::conjugate(circuit, qcore::DensityOperator::basis_state(4, 1));
    const auto identity = qcore::Projector::identity(2);
    const double p0 = qcore::born(rho, qcore::tensor(qcore::Projector::basis(2, 0), identity));
    const double p1 = qcore::born(rho, qcore::tensor(qcore::Projector::basis(2, 1), identity));

    run.constant = p0 >= 0.5;
    run.result.distribution = {{"0", p0}, {"1", p1}};
    run.result.verdict = run.constant ? "constant" : "balanced";
    const bool truly_constant = f(0) == f(1);
    run.result.success_probability = truly_constant ? p0 : p1;
    return run;
}

} // namespace qclogic::algorithms
