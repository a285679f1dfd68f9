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

#include "qclogic/logic/quotient.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace qclogic::logic {

namespace {

using Key = std::vector<long long>;

constexpr double kKeyScale = 1e9;
// Values within tol of each other may round up to two quanta apart.
constexpr long long kNeighbourQuanta = 2;

long long quantize(double x) { return std::llround(x * kKeyScale); }

bool neighbours(const Key &a, const Key &b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::llabs(a[i] - b[i]) > kNeighbourQuanta) return false;
    }
    return true;
}

std::string key_text(const Key &k, bool complex_entries) {
    std::string out;
    char buf[48];
    for (std::size_t i = 0; i < k.size(); ++i) {
        // -0 and 0 must print alike.
        const double v = static_cast<double>(k[i]) / kKeyScale + 0.0;
        std::snprintf(buf, sizeof buf, "%.*f", kQuotientKeyDigits, v);
        if (i) out += (complex_entries && i % 2 == 1) ? "," : ";";
        out += buf;
    }
    return out;
}

} // namespace

QuotientPartition quotient(std::span<const gates::GateWord> words, Relation relation,
                           const DensityOperator &rho, const std::optional<Projector> &p,
                           double tol) {
    if (relation != Relation::EquivRho && relation != Relation::EquivRhoP) {
        fail(ErrorKind::InvalidArgument, "quotients are taken under equiv_rho or equiv_rho_P");
    }
    if (relation == Relation::EquivRhoP && !p) {
        fail(ErrorKind::InvalidArgument, "equiv_rho_P quotient needs an event");
    }

    QuotientPartition out{relation, {}, {}, {}};
    std::vector<Key> class_keys;
    std::vector<UnitaryGate> representatives;
    std::map<Key, std::size_t> buckets;

    for (std::size_t w = 0; w < words.size(); ++w) {
        const UnitaryGate u = gates::compose_word(words[w]);
        qcore::require_same_dim(u.matrix(), rho.matrix(), "quotient");

        Key key;
        if (relation == Relation::EquivRho) {
            const auto m = qcore::conjugate(u, rho).matrix().row_major();
            key.reserve(2 * m.size());
            for (const auto &z : m) {
                key.push_back(quantize(z.real()));
                key.push_back(quantize(z.imag()));
            }
        } else {
            key.push_back(quantize(truth_value(u, rho, *p)));
        }

        std::optional<std::size_t> target;
        if (const auto it = buckets.find(key); it != buckets.end()) {
            target = it->second;
        } else {
            for (std::size_t c = 0; c < class_keys.size() && !target; ++c) {
                if (!neighbours(key, class_keys[c])) continue;
                const auto check = relation == Relation::EquivRho
                                       ? equiv_rho(u, representatives[c], rho, tol)
                                       : equiv_rho_P(u, representatives[c], rho, *p, tol);
                if (check.holds) target = c;
            }
            if (target) buckets.emplace(key, *target);
        }

        if (!target) {
            target = out.classes.size();
            buckets.emplace(key, *target);
            class_keys.push_back(key);
            representatives.push_back(u);
            out.classes.emplace_back();
            out.members.emplace_back();
            out.canonical_keys.push_back(key_text(key, relation == Relation::EquivRho));
        }
        out.classes[*target].push_back(words[w]);
        out.members[*target].push_back(w);
    }
    return out;
}

} // namespace qclogic::logic
