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

#include "qclogic/omlattice/lattice.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>

namespace qclogic::omlattice {

namespace {

std::string point_label(std::size_t point, std::size_t bits) {
    std::string s(bits, '0');
    for (std::size_t i = 0; i < bits; ++i) {
        if ((point >> (bits - 1 - i)) & 1U) s[i] = '1';
    }
    return s;
}

void require_index(std::size_t value, std::size_t n, const char *what) {
    if (value >= n) {
        fail(ErrorKind::IndexOutOfRange, std::string(what) + " refers to element " +
                                             std::to_string(value) + " of " +
                                             std::to_string(n));
    }
}

} // namespace

// ---- construction ----

LatticePtr FiniteOML::from_tables(std::vector<std::string> names,
                                  std::vector<std::uint32_t> meet,
                                  std::vector<std::uint32_t> join,
                                  std::vector<std::uint32_t> ortho, bool enforce_laws) {
    const std::size_t n = ortho.size();
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "a lattice needs at least one element");
    }
    if (n > kMaxTableElements) {
        fail(ErrorKind::SizeCapExceeded, "lattice of " + std::to_string(n) +
                                             " elements exceeds " +
                                             std::to_string(kMaxTableElements));
    }
    if (meet.size() != n * n || join.size() != n * n) {
        fail(ErrorKind::DimensionMismatch, "meet/join tables must be n x n");
    }
    for (const auto v : meet) require_index(v, n, "meet table");
    for (const auto v : join) require_index(v, n, "join table");
    for (const auto v : ortho) require_index(v, n, "ortho table");
    if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    }
    if (names.size() != n) {
        fail(ErrorKind::DimensionMismatch, "one name per element required");
    }

    std::shared_ptr<FiniteOML> l(new FiniteOML());
    l->size_ = n;
    l->names_ = std::move(names);
    for (std::size_t i = 0; i < n; ++i) {
        if (!l->lookup_.emplace(l->names_[i], i).second) {
            fail(ErrorKind::InvalidArgument, "duplicate element name '" + l->names_[i] + "'");
        }
    }
    l->meet_ = std::move(meet);
    l->join_ = std::move(join);
    l->ortho_ = std::move(ortho);
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
        lo = l->meet_[lo * n + i];
        hi = l->join_[hi * n + i];
    }
    l->zero_ = lo;
    l->one_ = hi;

    if (!enforce_laws) return l;
    for (const auto &law : check_laws(*l)) {
        if (law.required && !law.passed) {
            std::string where;
            for (const auto w : law.witness) {
                where += (where.empty() ? "" : ", ") + l->names_[w];
            }
            fail(ErrorKind::LawViolation, "law '" + law.law + "' fails at (" + where + ")");
        }
    }
    return l;
}

LatticePtr FiniteOML::from_order(std::vector<std::string> names, const std::vector<bool> &leq,
                                 std::vector<std::uint32_t> ortho, bool enforce_laws) {
    const std::size_t n = ortho.size();
    if (n == 0 || n > kMaxTableElements) {
        fail(ErrorKind::SizeCapExceeded, "lattice size " + std::to_string(n) +
                                             " outside 1.." +
                                             std::to_string(kMaxTableElements));
    }
    if (leq.size() != n * n) {
        fail(ErrorKind::DimensionMismatch, "order table must be n x n");
    }
    auto le = [&](std::size_t a, std::size_t b) { return static_cast<bool>(leq[a * n + b]); };
    for (std::size_t a = 0; a < n; ++a) {
        if (!le(a, a)) fail(ErrorKind::LawViolation, "law 'partial_order' fails: not reflexive");
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && le(a, b) && le(b, a)) {
                fail(ErrorKind::LawViolation, "law 'partial_order' fails: not antisymmetric");
            }
        }
    }

    std::vector<std::size_t> below(n, 0);
    std::vector<std::size_t> above(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (le(b, a)) ++below[a];
            if (le(a, b)) ++above[a];
        }
    }

    std::vector<std::uint32_t> meet(n * n);
    std::vector<std::uint32_t> join(n * n);
    std::vector<std::size_t> bounds;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            // glb: the lower bound with the largest down-set, if it dominates all.
            bounds.clear();
            for (std::size_t c = 0; c < n; ++c) {
                if (le(c, a) && le(c, b)) bounds.push_back(c);
            }
            std::optional<std::size_t> best;
            for (const auto c : bounds) {
                if (!best || below[c] > below[*best]) best = c;
            }
            if (!best || !std::all_of(bounds.begin(), bounds.end(),
                                      [&](std::size_t c) { return le(c, *best); })) {
                fail(ErrorKind::LawViolation, "law 'meet_glb' fails: no greatest lower bound for (" +
                                                  (names.size() == n ? names[a] + ", " + names[b]
                                                                     : std::to_string(a) + ", " +
                                                                           std::to_string(b)) +
                                                  ")");
            }
            meet[a * n + b] = meet[b * n + a] = static_cast<std::uint32_t>(*best);

            bounds.clear();
            for (std::size_t c = 0; c < n; ++c) {
                if (le(a, c) && le(b, c)) bounds.push_back(c);
            }
            best.reset();
            for (const auto c : bounds) {
                if (!best || above[c] > above[*best]) best = c;
            }
            if (!best || !std::all_of(bounds.begin(), bounds.end(),
                                      [&](std::size_t c) { return le(*best, c); })) {
                fail(ErrorKind::LawViolation, "law 'join_lub' fails: no least upper bound for (" +
                                                  (names.size() == n ? names[a] + ", " + names[b]
                                                                     : std::to_string(a) + ", " +
                                                                           std::to_string(b)) +
                                                  ")");
            }
            join[a * n + b] = join[b * n + a] = static_cast<std::uint32_t>(*best);
        }
    }
    return from_tables(std::move(names), std::move(meet), std::move(join), std::move(ortho),
                       enforce_laws);
}

LatticePtr FiniteOML::powerset(std::size_t n) {
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "boolean_oml needs at least one bit");
    }
    if (n > kMaxBooleanPoints) {
        fail(ErrorKind::SizeCapExceeded, "boolean_oml(" + std::to_string(n) + ") exceeds N = " +
                                             std::to_string(kMaxBooleanPoints));
    }
    std::shared_ptr<FiniteOML> l(new FiniteOML());
    l->powerset_points_ = std::size_t{1} << n;
    l->size_ = std::size_t{1} << l->powerset_points_;
    l->zero_ = 0;
    l->one_ = l->size_ - 1;
    return l;
}

LatticePtr boolean_oml(std::size_t n) { return FiniteOML::powerset(n); }

// ---- queries ----

void FiniteOML::check_index(std::size_t a) const { require_index(a, size_, "lattice query"); }

std::size_t FiniteOML::meet(std::size_t a, std::size_t b) const {
    if (is_powerset()) return a & b;
    return meet_[a * size_ + b];
}

std::size_t FiniteOML::join(std::size_t a, std::size_t b) const {
    if (is_powerset()) return a | b;
    return join_[a * size_ + b];
}

std::size_t FiniteOML::ortho(std::size_t a) const {
    if (is_powerset()) return ~a & one_;
    return ortho_[a];
}

std::string FiniteOML::name(std::size_t a) const {
    check_index(a);
    if (!is_powerset()) return names_[a];
    const std::size_t bits = static_cast<std::size_t>(std::countr_zero(powerset_points_));
    std::string out = "{";
    bool first = true;
    for (std::size_t p = 0; p < powerset_points_; ++p) {
        if ((a >> p) & 1U) {
            if (!first) out += ",";
            out += point_label(p, bits);
            first = false;
        }
    }
    return out + "}";
}

std::size_t FiniteOML::index_of(const std::string &name) const {
    if (!is_powerset()) {
        const auto it = lookup_.find(name);
        if (it == lookup_.end()) {
            fail(ErrorKind::IndexOutOfRange, "no element named '" + name + "'");
        }
        return it->second;
    }
    const std::size_t bits = static_cast<std::size_t>(std::countr_zero(powerset_points_));
    if (name.size() < 2 || name.front() != '{' || name.back() != '}') {
        fail(ErrorKind::IndexOutOfRange, "no element named '" + name + "'");
    }
    std::size_t mask = 0;
    std::size_t pos = 1;
    while (pos < name.size() - 1) {
        auto end = name.find(',', pos);
        if (end == std::string::npos || end > name.size() - 1) end = name.size() - 1;
        const std::string label = name.substr(pos, end - pos);
        bool found = false;
        for (std::size_t p = 0; p < powerset_points_ && !found; ++p) {
            if (point_label(p, bits) == label) {
                mask |= std::size_t{1} << p;
                found = true;
            }
        }
        if (!found) fail(ErrorKind::IndexOutOfRange, "no point '" + label + "' in '" + name + "'");
        pos = end + 1;
    }
    return mask;
}

std::vector<std::size_t> FiniteOML::atoms() const {
    std::vector<std::size_t> out;
    if (is_powerset()) {
        for (std::size_t p = 0; p < powerset_points_; ++p) out.push_back(std::size_t{1} << p);
        return out;
    }
    for (std::size_t a = 0; a < size_; ++a) {
        if (a == zero_) continue;
        bool atom = true;
        for (std::size_t b = 0; b < size_ && atom; ++b) {
            if (b != zero_ && b != a && leq(b, a)) atom = false;
        }
        if (atom) out.push_back(a);
    }
    return out;
}

void require_same_lattice(const LatticePtr &a, const LatticePtr &b, const char *context) {
    if (a.get() != b.get()) {
        fail(ErrorKind::LatticeMismatch, std::string(context) + ": objects live on different lattices");
    }
}

// ---- law battery ----

namespace {

using Tuple = std::array<std::size_t, 3>;
using Predicate = std::function<bool(const Tuple &)>;

struct LawSpec {
    const char *name;
    int arity;
    bool required;
    Predicate holds;
};

LawResult run_law(const FiniteOML &l, const LawSpec &spec, std::uint64_t seed) {
    LawResult out;
    out.law = spec.name;
    out.required = spec.required;
    const std::size_t n = l.size();
    const std::size_t limit = spec.arity == 1   ? SIZE_MAX
                              : spec.arity == 2 ? kExhaustivePairElements
                                                : kExhaustiveTripleElements;
    Tuple t{0, 0, 0};
    auto record = [&](const Tuple &bad) {
        out.passed = false;
        out.witness.assign(bad.begin(), bad.begin() + spec.arity);
    };

    if (n <= limit) {
        std::size_t total = 1;
        for (int i = 0; i < spec.arity; ++i) total *= n;
        for (std::size_t k = 0; k < total; ++k) {
            std::size_t rest = k;
            for (int i = spec.arity - 1; i >= 0; --i) {
                t[static_cast<std::size_t>(i)] = rest % n;
                rest /= n;
            }
            ++out.checked;
            if (!spec.holds(t)) {
                record(t);
                return out;
            }
        }
        return out;
    }

    out.exhaustive = false;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(spec.arity));
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < kLawSamples; ++k) {
        for (int i = 0; i < spec.arity; ++i) t[static_cast<std::size_t>(i)] = pick(rng);
        ++out.checked;
        if (!spec.holds(t)) {
            record(t);
            return out;
        }
    }
    return out;
}

std::vector<LawSpec> law_specs(const FiniteOML &l) {
    const auto le = [&l](std::size_t a, std::size_t b) { return l.leq(a, b); };
    const std::size_t zero = l.zero();
    const std::size_t one = l.one();
    return {
        {"partial_order", 3, true,
         [=](const Tuple &t) {
             const auto [a, b, c] = t;
             if (!le(a, a)) return false;
             if (le(a, b) && le(b, a) && a != b) return false;
             return !(le(a, b) && le(b, c)) || le(a, c);
         }},
        {"bounds", 1, true,
         [=, &l](const Tuple &t) {
             return le(zero, t[0]) && le(t[0], one) && l.meet(t[0], zero) == zero &&
                    l.join(t[0], one) == one;
         }},
        {"meet_glb", 3, true,
         [=, &l](const Tuple &t) {
             const auto [a, b, c] = t;
             const auto m = l.meet(a, b);
             return le(m, a) && le(m, b) && (!(le(c, a) && le(c, b)) || le(c, m));
         }},
        {"join_lub", 3, true,
         [=, &l](const Tuple &t) {
             const auto [a, b, c] = t;
             const auto j = l.join(a, b);
             return le(a, j) && le(b, j) && (!(le(a, c) && le(b, c)) || le(j, c));
         }},
        {"commutativity", 2, true,
         [&l](const Tuple &t) {
             return l.meet(t[0], t[1]) == l.meet(t[1], t[0]) &&
                    l.join(t[0], t[1]) == l.join(t[1], t[0]);
         }},
        {"associativity", 3, true,
         [&l](const Tuple &t) {
             const auto [a, b, c] = t;
             return l.meet(l.meet(a, b), c) == l.meet(a, l.meet(b, c)) &&
                    l.join(l.join(a, b), c) == l.join(a, l.join(b, c));
         }},
        {"absorption", 2, true,
         [&l](const Tuple &t) {
             const auto a = t[0];
             const auto b = t[1];
             return l.meet(a, l.join(a, b)) == a && l.join(a, l.meet(a, b)) == a;
         }},
        {"ortho_involution", 1, true,
         [&l](const Tuple &t) { return l.ortho(l.ortho(t[0])) == t[0]; }},
        {"ortho_order_reversing", 2, true,
         [=, &l](const Tuple &t) {
             return !le(t[0], t[1]) || le(l.ortho(t[1]), l.ortho(t[0]));
         }},
        {"ortho_meet_zero", 1, true,
         [=, &l](const Tuple &t) { return l.meet(t[0], l.ortho(t[0])) == zero; }},
        {"ortho_join_one", 1, true,
         [=, &l](const Tuple &t) { return l.join(t[0], l.ortho(t[0])) == one; }},
        {"orthomodular", 2, true,
         [=, &l](const Tuple &t) {
             const auto a = t[0];
             const auto b = t[1];
             return !le(a, b) || b == l.join(a, l.meet(l.ortho(a), b));
         }},
        {"distributive", 3, false,
         [&l](const Tuple &t) {
             const auto [a, b, c] = t;
             return l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c));
         }},
    };
}

} // namespace

std::vector<LawResult> check_laws(const FiniteOML &lattice, std::uint64_t seed) {
    std::vector<LawResult> out;
    for (const auto &spec : law_specs(lattice)) {
        out.push_back(run_law(lattice, spec, seed));
    }
    return out;
}

LawResult check_law(const FiniteOML &lattice, const std::string &law, std::uint64_t seed) {
    for (const auto &spec : law_specs(lattice)) {
        if (law == spec.name) return run_law(lattice, spec, seed);
    }
    fail(ErrorKind::InvalidArgument, "unknown law '" + law + "'");
}

} // namespace qclogic::omlattice
