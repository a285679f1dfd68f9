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

#include "qclogic/omlattice/lattice_json.hpp"

#include <bit>
#include <map>

#include "qclogic/omlattice/projection.hpp"

namespace qclogic::omlattice {

namespace {

[[noreturn]] void bad_document(const std::string &why) {
    fail(ErrorKind::ParseError, "lattice document: " + why);
}

std::vector<std::size_t> covers_of(const FiniteOML &l, std::size_t a) {
    std::vector<std::size_t> out;
    if (l.is_powerset()) {
        for (std::size_t p = 0; p < l.powerset_points(); ++p) {
            if (!((a >> p) & 1U)) out.push_back(a | (std::size_t{1} << p));
        }
        return out;
    }
    for (std::size_t b = 0; b < l.size(); ++b) {
        if (b == a || !l.leq(a, b)) continue;
        bool cover = true;
        for (std::size_t c = 0; c < l.size() && cover; ++c) {
            if (c != a && c != b && l.leq(a, c) && l.leq(c, b)) cover = false;
        }
        if (cover) out.push_back(b);
    }
    return out;
}

} // namespace

Json lattice_to_json(const FiniteOML &l) {
    Json elements = Json::array();
    Json order = Json::object();
    Json ortho = Json::object();
    for (std::size_t a = 0; a < l.size(); ++a) {
        const std::string name = l.name(a);
        elements.push_back(name);
        Json up = Json::array();
        for (const auto b : covers_of(l, a)) up.push_back(l.name(b));
        order[name] = std::move(up);
        ortho[name] = l.name(l.ortho(a));
    }
    return {{"elements", std::move(elements)},
            {"order", std::move(order)},
            {"ortho", std::move(ortho)},
            {"zero", l.name(l.zero())},
            {"one", l.name(l.one())}};
}

LatticePtr lattice_from_json(const Json &j, bool enforce_laws) {
    if (!j.is_object()) bad_document("expected an object");
    if (!j.contains("elements") || !j["elements"].is_array()) bad_document("missing 'elements'");
    if (!j.contains("ortho") || !j["ortho"].is_object()) bad_document("missing 'ortho'");

    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    for (const auto &e : j["elements"]) {
        if (!e.is_string()) bad_document("element names must be strings");
        if (!index.emplace(e.get<std::string>(), names.size()).second) {
            bad_document("duplicate element '" + e.get<std::string>() + "'");
        }
        names.push_back(e.get<std::string>());
    }
    const std::size_t n = names.size();
    if (n == 0) bad_document("no elements");
    if (n > kMaxTableElements) {
        fail(ErrorKind::SizeCapExceeded, "lattice document lists " + std::to_string(n) +
                                             " elements; import is capped at " +
                                             std::to_string(kMaxTableElements));
    }
    const auto lookup = [&](const Json &name, const char *where) {
        if (!name.is_string()) bad_document(std::string(where) + " must name elements");
        const auto it = index.find(name.get<std::string>());
        if (it == index.end()) {
            bad_document(std::string(where) + " names unknown element '" +
                         name.get<std::string>() + "'");
        }
        return it->second;
    };

    std::vector<bool> leq(n * n, false);
    for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = true;
    if (j.contains("order")) {
        if (!j["order"].is_object()) bad_document("'order' must be an object");
        for (const auto &[from, ups] : j["order"].items()) {
            const std::size_t a = lookup(Json(from), "order");
            if (!ups.is_array()) bad_document("order entries must be arrays");
            for (const auto &b : ups) leq[a * n + lookup(b, "order")] = true;
        }
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!leq[a * n + k]) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (leq[k * n + b]) leq[a * n + b] = true;
            }
        }
    }

    std::vector<std::uint32_t> ortho(n, 0);
    std::vector<bool> seen(n, false);
    for (const auto &[from, to] : j["ortho"].items()) {
        const std::size_t a = lookup(Json(from), "ortho");
        ortho[a] = static_cast<std::uint32_t>(lookup(to, "ortho"));
        seen[a] = true;
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (!seen[a]) bad_document("ortho missing for '" + names[a] + "'");
    }

    auto lattice = FiniteOML::from_order(names, leq, std::move(ortho), enforce_laws);
    if (j.contains("zero") && lookup(j["zero"], "zero") != lattice->zero()) {
        fail(ErrorKind::LawViolation, "law 'bounds' fails: declared zero is not the bottom");
    }
    if (j.contains("one") && lookup(j["one"], "one") != lattice->one()) {
        fail(ErrorKind::LawViolation, "law 'bounds' fails: declared one is not the top");
    }
    return lattice;
}

Json state_to_json(const LatticeState &state) {
    Json out = Json::object();
    for (std::size_t a = 0; a < state.values().size(); ++a) {
        out[state.lattice()->name(a)] = state.values()[a];
    }
    return out;
}

LatticeState state_from_json(const LatticePtr &lattice, const Json &j) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "state document must be an object");
    std::vector<double> values(lattice->size(), 0.0);
    std::vector<bool> seen(lattice->size(), false);
    for (const auto &[name, value] : j.items()) {
        std::size_t a = 0;
        try {
            a = lattice->index_of(name);
        } catch (const Error &) {
            fail(ErrorKind::ParseError, "state names unknown element '" + name + "'");
        }
        if (!value.is_number()) fail(ErrorKind::ParseError, "state value for '" + name + "' is not a number");
        values[a] = value.get<double>();
        seen[a] = true;
    }
    for (std::size_t a = 0; a < seen.size(); ++a) {
        if (!seen[a]) fail(ErrorKind::ParseError, "state omits element '" + lattice->name(a) + "'");
    }
    return LatticeState::create(lattice, std::move(values), StateOrigin::Table);
}

std::vector<std::string> builtin_lattice_names() {
    return {"bool1", "bool2", "bool3", "bool4", "mo2", "diag1", "diag2"};
}

LatticePtr builtin_lattice(const std::string &name) {
    if (name.size() == 5 && name.starts_with("bool") && name[4] >= '1' && name[4] <= '4') {
        return boolean_oml(static_cast<std::size_t>(name[4] - '0'));
    }
    if (name == "mo2") return mo2_lattice().lattice;
    if (name == "diag1") return diagonal_lattice(1).lattice;
    if (name == "diag2") return diagonal_lattice(2).lattice;
    fail(ErrorKind::InvalidArgument, "unknown builtin lattice '" + name + "'");
}

Json laws_to_json(const FiniteOML &lattice, const std::vector<LawResult> &laws) {
    Json out = Json::array();
    for (const auto &law : laws) {
        Json entry = {{"law", law.law},
                      {"passed", law.passed},
                      {"required", law.required},
                      {"exhaustive", law.exhaustive},
                      {"checked", law.checked}};
        if (!law.passed) {
            Json w = Json::array();
            for (const auto e : law.witness) w.push_back(lattice.name(e));
            entry["witness"] = std::move(w);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace qclogic::omlattice
