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

#include "qclogic/algorithms/period.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "qclogic/gates/gates.hpp"

namespace qclogic::algorithms {

qcore::UnitaryGate qft(std::size_t n) {
    return qcore::UnitaryGate::validate(gates::qft_matrix(n));
}

void PeriodicSpec::validate(bool require_power_of_two) const {
    if (N == 0 || r == 0) {
        fail(ErrorKind::InvalidSpec, "N and r must be positive");
    }
    if (N > kMaxPeriodModulus) {
        fail(ErrorKind::InvalidSpec, "N = " + std::to_string(N) + " exceeds " +
                                         std::to_string(kMaxPeriodModulus));
    }
    if (require_power_of_two && !std::has_single_bit(N)) {
        fail(ErrorKind::InvalidSpec, "N = " + std::to_string(N) + " is not a power of two");
    }
    if (N % r != 0) {
        fail(ErrorKind::InvalidSpec, "r = " + std::to_string(r) + " does not divide N = " +
                                         std::to_string(N));
    }
    if (f.size() != N) {
        fail(ErrorKind::InvalidSpec, "f lists " + std::to_string(f.size()) + " values, expected " +
                                         std::to_string(N));
    }
    for (std::size_t x = 0; x < N; ++x) {
        if (f[(x + r) % N] != f[x]) {
            fail(ErrorKind::InvalidSpec, "f(" + std::to_string(x) + " + r) != f(" +
                                             std::to_string(x) + ")");
        }
    }
    std::set<std::uint64_t> seen(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(r));
    if (seen.size() != r) {
        fail(ErrorKind::InvalidSpec, "f repeats a value within one period");
    }
    const std::uint64_t top = *std::max_element(f.begin(), f.end());
    if (top >= kMaxPeriodStateSize / N) {
        fail(ErrorKind::InvalidSpec, "values of f too large for the second register");
    }
}

PeriodicSpec PeriodicSpec::canonical(std::size_t n, std::size_t r, bool require_power_of_two) {
    PeriodicSpec spec{n, r, {}};
    if (r == 0) fail(ErrorKind::InvalidSpec, "r must be positive");
    for (std::size_t x = 0; x < n; ++x) spec.f.push_back(x % r);
    spec.validate(require_power_of_two);
    return spec;
}

PeriodicSpec PeriodicSpec::from_json(const Json &j, bool require_power_of_two) {
    if (!j.is_object() || !j.contains("N") || !j.contains("r") || !j["N"].is_number_unsigned() ||
        !j["r"].is_number_unsigned()) {
        fail(ErrorKind::ParseError, "period spec needs unsigned 'N' and 'r'");
    }
    const auto n = j["N"].get<std::size_t>();
    const auto r = j["r"].get<std::size_t>();
    if (!j.contains("f")) return canonical(n, r, require_power_of_two);
    if (!j["f"].is_array()) fail(ErrorKind::ParseError, "'f' must be an array of integers");
    PeriodicSpec spec{n, r, {}};
    for (const auto &v : j["f"]) {
        if (!v.is_number_unsigned()) fail(ErrorKind::ParseError, "'f' must hold unsigned integers");
        spec.f.push_back(v.get<std::uint64_t>());
    }
    spec.validate(require_power_of_two);
    return spec;
}

Json PeriodicSpec::to_json() const { return {{"N", N}, {"r", r}, {"f", f}}; }

PeriodRun period_find(const PeriodicSpec &spec, const PeriodOptions &options) {
    spec.validate(options.require_power_of_two);
    if (options.samples == 0) {
        fail(ErrorKind::InvalidArgument, "period estimate needs at least one sample");
    }
    const std::size_t n = spec.N;
    const auto nn = static_cast<Eigen::Index>(n);
    const std::size_t m = static_cast<std::size_t>(*std::max_element(spec.f.begin(), spec.f.end())) + 1;
    const auto mm = static_cast<Eigen::Index>(m);
    const auto f_gate = qft(n);
    const Eigen::MatrixXcd &F = f_gate.matrix().eigen();

    // |f> = N^{-1/2} sum_x |x>|f(x)>, held as the N x M amplitude matrix A.
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(nn, mm);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t x = 0; x < n; ++x) {
        a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(spec.f[x])) = amp;
    }

    PeriodRun run;
    std::vector<double> dist(n, 0.0);
    for (Eigen::Index y = 0; y < mm; ++y) {
        const double py = a.col(y).squaredNorm();
        if (py <= 0.0) continue;
        if (options.mode == PeriodMode::Branching && options.y0 &&
            static_cast<std::uint64_t>(y) != *options.y0) {
            continue;
        }
        PeriodBranch b;
        b.y0 = static_cast<std::uint64_t>(y);
        b.probability = py;
        b.conditional = a.col(y) / std::sqrt(py);
        for (std::size_t x = 0; x < n; ++x) {
            if (spec.f[x] == b.y0) {
                b.x0 = x;
                break;
            }
        }
        b.transformed = F * b.conditional;
        run.branches.push_back(std::move(b));
    }
    if (options.mode == PeriodMode::Branching && options.y0 && run.branches.empty()) {
        fail(ErrorKind::InvalidSpec, "f never takes the value " + std::to_string(*options.y0));
    }

    if (options.mode == PeriodMode::Mixture) {
        // rho_1 = Tr_2 |f><f| = A A^dagger, then F rho_1 F^dagger.
        const auto rho1 = qcore::DensityOperator::validate(
            qcore::ComplexMatrix(a * a.adjoint()));
        const auto out = qcore::conjugate(f_gate, rho1);
        for (std::size_t c = 0; c < n; ++c) {
            dist[c] = qcore::born(out, qcore::Projector::basis(n, c));
        }
    } else {
        double weight = 0.0;
        for (const auto &b : run.branches) weight += b.probability;
        for (const auto &b : run.branches) {
            for (std::size_t c = 0; c < n; ++c) {
                dist[c] += b.probability / weight *
                           std::norm(b.transformed(static_cast<Eigen::Index>(c)));
            }
        }
    }

    const std::size_t step = n / spec.r;
    double success = 0.0;
    for (std::size_t j = 0; j < spec.r; ++j) {
        if (std::gcd(j, spec.r) == 1) success += dist[j * step];
    }

    std::mt19937_64 rng(options.seed);
    std::discrete_distribution<std::size_t> pick(dist.begin(), dist.end());
    std::size_t g = n;
    for (std::size_t s = 0; s < options.samples; ++s) {
        const std::size_t c = pick(rng);
        run.samples.push_back(c);
        g = std::gcd(g, c);
    }
    run.estimated_period = n / g;

    for (std::size_t c = 0; c < n; ++c) {
        run.result.distribution.emplace_back(std::to_string(c), dist[c]);
    }
    run.result.success_probability = std::clamp(success, 0.0, 1.0);
    run.result.verdict = "r=" + std::to_string(run.estimated_period);
    return run;
}

} // namespace qclogic::algorithms
