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

#include "qclogic/classical/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace qclogic::classical {

StochasticOutput StochasticOutput::create(std::size_t input_bits, std::size_t output_bits,
                                          std::vector<std::vector<double>> rows,
                                          double tolerance) {
    if (input_bits > kMaxStochasticBits || output_bits > kMaxStochasticBits) {
        fail(ErrorKind::SizeCapExceeded, "stochastic tables limited to 16 bits per side");
    }
    const std::size_t n_inputs = std::size_t{1} << input_bits;
    const std::size_t n_outputs = std::size_t{1} << output_bits;
    if (rows.size() != n_inputs) {
        throw ValidationFailure("total", static_cast<double>(n_inputs) -
                                             static_cast<double>(rows.size()));
    }
    for (const auto &r : rows) {
        if (r.size() != n_outputs) {
            throw ValidationFailure("row_length", static_cast<double>(r.size()));
        }
        double sum = 0.0;
        for (const double p : r) {
            if (!(p >= 0.0) || !std::isfinite(p)) {
                throw ValidationFailure("nonnegative", p);
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > tolerance) {
            throw ValidationFailure("normalization", std::abs(sum - 1.0));
        }
    }
    return StochasticOutput(input_bits, output_bits, std::move(rows));
}

StochasticOutput StochasticOutput::deterministic(std::span<const BoolCircuit> outputs) {
    if (outputs.empty()) {
        fail(ErrorKind::ArityMismatch, "deterministic table needs at least one output");
    }
    const std::size_t m = outputs.front().arity();
    const std::size_t n = outputs.size();
    if (m > kMaxStochasticBits || n > kMaxStochasticBits) {
        fail(ErrorKind::SizeCapExceeded, "stochastic tables limited to 16 bits per side");
    }
    std::vector<std::vector<double>> rows(std::size_t{1} << m,
                                          std::vector<double>(std::size_t{1} << n, 0.0));
    for (std::uint64_t x = 0; x < rows.size(); ++x) {
        std::uint64_t y = 0;
        for (const auto &c : outputs) {
            y = (y << 1) | static_cast<std::uint64_t>(eval_circuit(c, BitString(m, x)));
        }
        rows[x][y] = 1.0;
    }
    return create(m, n, std::move(rows));
}

std::span<const double> StochasticOutput::row(const BitString &x) const {
    if (x.length() != input_bits_) {
        fail(ErrorKind::UnknownInput,
             "input '" + x.str() + "' is not in {0,1}^" + std::to_string(input_bits_));
    }
    return rows_[x.value()];
}

// ---- EventSubset ----

EventSubset::EventSubset(std::size_t ground_bits, std::vector<BitString> members)
    : ground_bits_(ground_bits) {
    if (ground_bits > kMaxStochasticBits) {
        fail(ErrorKind::SizeCapExceeded, "event ground set limited to 16 bits");
    }
    for (const auto &m : members) {
        if (m.length() != ground_bits) {
            throw ValidationFailure("member_length", static_cast<double>(m.length()));
        }
        members_.push_back(m.value());
    }
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw ValidationFailure("distinct_members", 1.0);
    }
}

EventSubset EventSubset::empty(std::size_t ground_bits) {
    return EventSubset(ground_bits, std::vector<BitString>{});
}

EventSubset EventSubset::full(std::size_t ground_bits) {
    return empty(ground_bits).complement();
}

bool EventSubset::contains(std::uint64_t value) const {
    return std::binary_search(members_.begin(), members_.end(), value);
}

EventSubset EventSubset::complement() const {
    std::vector<std::uint64_t> out;
    const std::uint64_t count = std::uint64_t{1} << ground_bits_;
    for (std::uint64_t v = 0; v < count; ++v) {
        if (!contains(v)) {
            out.push_back(v);
        }
    }
    return EventSubset(ground_bits_, std::move(out), 0);
}

EventSubset EventSubset::united(const EventSubset &other) const {
    if (other.ground_bits_ != ground_bits_) {
        fail(ErrorKind::GroundMismatch, "events over different ground sets");
    }
    std::vector<std::uint64_t> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    return EventSubset(ground_bits_, std::move(out), 0);
}

EventSubset EventSubset::intersected(const EventSubset &other) const {
    if (other.ground_bits_ != ground_bits_) {
        fail(ErrorKind::GroundMismatch, "events over different ground sets");
    }
    std::vector<std::uint64_t> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out));
    return EventSubset(ground_bits_, std::move(out), 0);
}

bool EventSubset::disjoint(const EventSubset &other) const {
    return intersected(other).members_.empty();
}

bool EventSubset::subset_of(const EventSubset &other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

double induced_measure(const StochasticOutput &f, const BitString &x,
                       const EventSubset &a) {
    if (a.ground_bits() != f.output_bits()) {
        fail(ErrorKind::GroundMismatch,
             "event over {0,1}^" + std::to_string(a.ground_bits()) + ", outputs are {0,1}^" +
                 std::to_string(f.output_bits()));
    }
    const auto row = f.row(x);
    double sum = 0.0;
    for (const std::uint64_t y : a.members()) {
        sum += row[y];
    }
    return sum;
}

double KolmogorovReport::max_violation() const {
    return std::max({std::abs(empty_measure), std::abs(full_measure - 1.0),
                     max_complement_violation, max_additivity_violation});
}

KolmogorovReport check_kolmogorov(const StochasticOutput &f, const BitString &x,
                                  std::size_t trials, std::uint64_t seed) {
    const std::size_t n = f.output_bits();
    KolmogorovReport report;
    report.trials = trials;
    report.empty_measure = induced_measure(f, x, EventSubset::empty(n));
    report.full_measure = induced_measure(f, x, EventSubset::full(n));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> side(0, 2);
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<BitString> xs;
        std::vector<BitString> ys;
        for (std::uint64_t v = 0; v < count; ++v) {
            switch (side(rng)) {
            case 0: xs.emplace_back(n, v); break;
            case 1: ys.emplace_back(n, v); break;
            default: break;
            }
        }
        const EventSubset a(n, xs);
        const EventSubset b(n, ys);
        const double ma = induced_measure(f, x, a);
        const double mb = induced_measure(f, x, b);
        report.max_complement_violation =
            std::max(report.max_complement_violation,
                     std::abs(induced_measure(f, x, a.complement()) - (1.0 - ma)));
        report.max_additivity_violation =
            std::max(report.max_additivity_violation,
                     std::abs(induced_measure(f, x, a.united(b)) - (ma + mb)));
    }
    return report;
}

std::vector<BitString> sample_outputs(const StochasticOutput &f, const BitString &x,
                                      std::size_t count, std::uint64_t seed) {
    const auto row = f.row(x);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::uint64_t> dist(row.begin(), row.end());
    std::vector<BitString> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(f.output_bits(), dist(rng));
    }
    return out;
}

StochasticOutput stochastic_from_json(const Json &j, double tolerance) {
    if (!j.is_object() || !j.contains("M") || !j.contains("N") || !j.contains("rows") ||
        !j.at("M").is_number_unsigned() || !j.at("N").is_number_unsigned() ||
        !j.at("rows").is_object()) {
        fail(ErrorKind::ParseError, "stochastic table needs unsigned 'M', 'N' and object 'rows'");
    }
    const auto m = j.at("M").get<std::size_t>();
    const auto n = j.at("N").get<std::size_t>();
    if (m > kMaxStochasticBits || n > kMaxStochasticBits) {
        fail(ErrorKind::SizeCapExceeded, "stochastic tables limited to 16 bits per side");
    }
    std::vector<std::vector<double>> rows(std::size_t{1} << m);
    std::vector<bool> seen(rows.size(), false);
    for (const auto &[key, value] : j.at("rows").items()) {
        const BitString x = BitString::parse(key);
        if (x.length() != m) {
            fail(ErrorKind::ParseError, "row key '" + key + "' is not " + std::to_string(m) + " bits");
        }
        if (!value.is_array()) {
            fail(ErrorKind::ParseError, "row '" + key + "' must be an array");
        }
        for (const auto &p : value) {
            if (!p.is_number()) {
                fail(ErrorKind::ParseError, "row '" + key + "' holds a non-number");
            }
            rows[x.value()].push_back(p.get<double>());
        }
        seen[x.value()] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ValidationFailure("total", static_cast<double>(
                                             std::count(seen.begin(), seen.end(), false)));
    }
    return StochasticOutput::create(m, n, std::move(rows), tolerance);
}

Json stochastic_to_json(const StochasticOutput &f) {
    Json rows = Json::object();
    const std::uint64_t count = std::uint64_t{1} << f.input_bits();
    for (std::uint64_t v = 0; v < count; ++v) {
        const BitString x(f.input_bits(), v);
        const auto r = f.row(x);
        rows[x.str()] = std::vector<double>(r.begin(), r.end());
    }
    return Json{{"M", f.input_bits()}, {"N", f.output_bits()}, {"rows", std::move(rows)}};
}

} // namespace qclogic::classical
