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

#include "qclogic/omlattice/states.hpp"

#include <cmath>
#include <bit>
#include <string>

namespace qclogic::omlattice {

namespace {

[[noreturn]] void invalid_state(const char *invariant, double magnitude, const std::string &msg) {
    throw ValidationFailure(invariant, magnitude, "lattice state: " + msg);
}

[[noreturn]] void invalid_map(const char *invariant, const std::string &msg) {
    throw ValidationFailure(invariant, 1.0, "lattice automorphism: " + msg);
}

} // namespace

LatticeState LatticeState::create(LatticePtr lattice, std::vector<double> values,
                                  StateOrigin origin, double tolerance) {
    const FiniteOML &l = *lattice;
    const std::size_t n = l.size();
    if (values.size() != n) {
        invalid_state("size", static_cast<double>(values.size()),
                      "expected " + std::to_string(n) + " values");
    }
    for (std::size_t a = 0; a < n; ++a) {
        const double v = values[a];
        if (!std::isfinite(v) || v < -tolerance || v > 1.0 + tolerance) {
            invalid_state("range", v, "value of " + l.name(a) + " outside [0, 1]");
        }
    }
    if (std::abs(values[l.zero()]) > tolerance) {
        invalid_state("zero", std::abs(values[l.zero()]), "value at 0 must be 0");
    }
    if (std::abs(values[l.one()] - 1.0) > tolerance) {
        invalid_state("one", std::abs(values[l.one()] - 1.0), "value at 1 must be 1");
    }

    if (l.is_powerset()) {
        // Additivity on a Boolean algebra reduces to summing atoms.
        for (std::size_t a = 0; a < n; ++a) {
            double sum = 0.0;
            for (std::size_t p = 0; p < l.powerset_points(); ++p) {
                if ((a >> p) & 1U) sum += values[std::size_t{1} << p];
            }
            if (std::abs(sum - values[a]) > tolerance) {
                invalid_state("additivity", std::abs(sum - values[a]),
                              "value of " + l.name(a) + " is not the sum of its points");
            }
        }
    } else {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!l.orthogonal(a, b)) continue;
                const double gap = std::abs(values[l.join(a, b)] - values[a] - values[b]);
                if (gap > tolerance) {
                    invalid_state("additivity", gap,
                                  "not additive on orthogonal pair (" + l.name(a) + ", " +
                                      l.name(b) + ")");
                }
            }
        }
    }
    return LatticeState(std::move(lattice), std::move(values), origin, tolerance);
}

double LatticeState::value(std::size_t element) const {
    lattice_->check_index(element);
    return values_[element];
}

LatticeState point_mass(const LatticePtr &lattice, std::size_t atom) {
    lattice->check_index(atom);
    std::vector<double> values(lattice->size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = lattice->leq(atom, x) ? 1.0 : 0.0;
    }
    return LatticeState::create(lattice, std::move(values), StateOrigin::Table);
}

// ---- automorphisms ----

LatticeAutomorphism LatticeAutomorphism::create(LatticePtr lattice, std::vector<std::size_t> map) {
    const FiniteOML &l = *lattice;
    const std::size_t n = l.size();
    if (map.size() != n) {
        invalid_map("bijection", "expected " + std::to_string(n) + " images");
    }
    std::vector<bool> hit(n, false);
    for (const auto y : map) {
        if (y >= n || hit[y]) invalid_map("bijection", "map is not a permutation");
        hit[y] = true;
    }
    if (map[l.zero()] != l.zero() || map[l.one()] != l.one()) {
        invalid_map("bounds", "0 and 1 must be fixed");
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (map[l.ortho(a)] != l.ortho(map[a])) {
            invalid_map("ortho", "ortho not preserved at " + l.name(a));
        }
    }
    if (l.is_powerset()) {
        // A map that sends points to points and unions to unions preserves
        // every meet and join of a finite Boolean algebra.
        for (std::size_t p = 0; p < l.powerset_points(); ++p) {
            if (std::popcount(map[std::size_t{1} << p]) != 1) {
                invalid_map("join", "atom " + l.name(std::size_t{1} << p) + " not sent to an atom");
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t image = 0;
            for (std::size_t p = 0; p < l.powerset_points(); ++p) {
                if ((a >> p) & 1U) image |= map[std::size_t{1} << p];
            }
            if (image != map[a]) invalid_map("join", "join not preserved at " + l.name(a));
        }
    } else {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (map[l.meet(a, b)] != l.meet(map[a], map[b])) {
                    invalid_map("meet", "meet not preserved at (" + l.name(a) + ", " +
                                            l.name(b) + ")");
                }
                if (map[l.join(a, b)] != l.join(map[a], map[b])) {
                    invalid_map("join", "join not preserved at (" + l.name(a) + ", " +
                                            l.name(b) + ")");
                }
            }
        }
    }
    return LatticeAutomorphism(std::move(lattice), std::move(map));
}

LatticeAutomorphism LatticeAutomorphism::identity(const LatticePtr &lattice) {
    std::vector<std::size_t> map(lattice->size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
    return LatticeAutomorphism(lattice, std::move(map));
}

std::size_t LatticeAutomorphism::operator()(std::size_t element) const {
    lattice_->check_index(element);
    return map_[element];
}

LatticeAutomorphism point_automorphism(const LatticePtr &lattice,
                                       std::span<const std::size_t> f) {
    if (!lattice->is_powerset()) {
        fail(ErrorKind::InvalidArgument, "point automorphisms need a powerset lattice");
    }
    const std::size_t points = lattice->powerset_points();
    if (f.size() != points) {
        fail(ErrorKind::InvalidArgument, "expected one image per point");
    }
    std::vector<bool> hit(points, false);
    for (const auto y : f) {
        if (y >= points || hit[y]) fail(ErrorKind::InvalidArgument, "not a permutation of points");
        hit[y] = true;
    }
    // map(X) = f^{-1}(X) = { p : f(p) in X }
    std::vector<std::size_t> map(lattice->size(), 0);
    for (std::size_t x = 0; x < map.size(); ++x) {
        for (std::size_t p = 0; p < points; ++p) {
            if ((x >> f[p]) & 1U) map[x] |= std::size_t{1} << p;
        }
    }
    return LatticeAutomorphism::create(lattice, std::move(map));
}

LatticeState pushforward(const LatticeAutomorphism &u, const LatticeState &nu) {
    require_same_lattice(u.lattice(), nu.lattice(), "pushforward");
    std::vector<double> values(nu.values().size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = nu.values()[u.map()[x]];
    }
    return LatticeState::create(nu.lattice(), std::move(values), nu.origin(), nu.tolerance());
}

LatticeState pushforward(std::span<const LatticeAutomorphism> word, const LatticeState &nu) {
    LatticeState out = nu;
    for (const auto &u : word) {
        out = pushforward(u, out);
    }
    return out;
}

SuperpositionResult is_superposition(const LatticeState &nu, std::span<const LatticeState> d,
                                     std::optional<double> threshold) {
    bool numeric = nu.origin() == StateOrigin::Numeric;
    for (const auto &mu : d) {
        require_same_lattice(mu.lattice(), nu.lattice(), "is_superposition");
        numeric = numeric || mu.origin() == StateOrigin::Numeric;
    }
    SuperpositionResult out;
    out.threshold = threshold.value_or(numeric ? kNumericZeroThreshold : 0.0);
    for (std::size_t x = 0; x < nu.values().size(); ++x) {
        bool annihilated = true;
        for (const auto &mu : d) {
            if (mu.values()[x] > out.threshold) {
                annihilated = false;
                break;
            }
        }
        if (annihilated && nu.values()[x] > out.threshold) {
            out.is_superposition = false;
            out.violation = x;
            return out;
        }
    }
    return out;
}

} // namespace qclogic::omlattice
