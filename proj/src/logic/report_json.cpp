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

#include "qclogic/logic/report_json.hpp"

#include "qclogic/gates/word_format.hpp"
#include "qclogic/qcore/matrix_json.hpp"

namespace qclogic::logic {

Json report_to_json(const EquivalenceReport &r) {
    Json j;
    j["relation"] = std::string(relation_name(r.relation));
    j["holds"] = r.holds;
    j["lhs"] = r.lhs ? Json(*r.lhs) : Json(nullptr);
    j["rhs"] = r.rhs ? Json(*r.rhs) : Json(nullptr);
    j["tolerance"] = r.tolerance;
    j["deviation"] = r.deviation;
    if (r.theta) j["theta"] = *r.theta;
    if (r.strict_equal) j["strict_equal"] = *r.strict_equal;
    if (r.approximate) j["approximate"] = true;
    if (r.witness) {
        Json w = Json::object();
        if (r.witness->state) w["state"] = qcore::matrix_to_json(r.witness->state->matrix());
        if (r.witness->event) w["event"] = qcore::matrix_to_json(r.witness->event->matrix());
        j["witness"] = std::move(w);
    }
    return j;
}

Json hierarchy_to_json(const HierarchyReport &r) {
    Json j;
    j["equiv_total"] = report_to_json(r.total);
    j["equiv_rho"] = report_to_json(r.rho);
    j["equiv_rho_P"] = report_to_json(r.rho_P);
    if (r.P) j["equiv_P"] = report_to_json(*r.P);
    return j;
}

Json quotient_to_json(const QuotientPartition &q) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
        Json words = Json::array();
        for (const auto &w : q.classes[c]) words.push_back(gates::format_word(w));
        classes.push_back({{"key", q.canonical_keys[c]}, {"words", std::move(words)},
                           {"members", q.members[c]}});
    }
    return {{"relation", std::string(relation_name(q.relation))},
            {"class_count", q.classes.size()},
            {"classes", std::move(classes)}};
}

} // namespace qclogic::logic
