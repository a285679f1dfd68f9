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

#include <cstdint>
#include <span>
#include <vector>

#include "qclogic/classical/circuit.hpp"
#include "qclogic/error.hpp"
#include "qclogic/json_format.hpp"

namespace qclogic::classical {

/// Largest output register for which dense distribution tables are stored.
inline constexpr std::size_t kMaxStochasticBits = 16;

/**
 * Output distributions F_x of a non-deterministic classical computation.
 *
 * One row per input x in {0,1}^M, each a probability vector over the 2^N
 * outputs indexed by BitString::value(). Every row is non-negative and
 * sums to one within the construction tolerance.
 */
class StochasticOutput {
  public:
    /// `rows[x]` is the distribution for input value x; rows.size() must be
    /// 2^input_bits. Throws ValidationFailure ("total", "row_length",
    /// "nonnegative", "normalization").
    static StochasticOutput create(std::size_t input_bits, std::size_t output_bits,
                                   std::vector<std::vector<double>> rows,
                                   double tolerance = kDefaultTolerance);

    /// Point-mass rows for a deterministic multi-output circuit; output bit
    /// k is outputs[k].
    static StochasticOutput deterministic(std::span<const BoolCircuit> outputs);

    [[nodiscard]] std::size_t input_bits() const noexcept { return input_bits_; }
    [[nodiscard]] std::size_t output_bits() const noexcept { return output_bits_; }
    /// Throws UnknownInput.
    [[nodiscard]] std::span<const double> row(const BitString &x) const;

  private:
    StochasticOutput(std::size_t m, std::size_t n, std::vector<std::vector<double>> rows)
        : input_bits_(m), output_bits_(n), rows_(std::move(rows)) {}
    std::size_t input_bits_;
    std::size_t output_bits_;
    std::vector<std::vector<double>> rows_;
};

/// A subset of {0,1}^N, kept sorted by value.
class EventSubset {
  public:
    EventSubset(std::size_t ground_bits, std::vector<BitString> members);
    static EventSubset empty(std::size_t ground_bits);
    static EventSubset full(std::size_t ground_bits);

    [[nodiscard]] std::size_t ground_bits() const noexcept { return ground_bits_; }
    [[nodiscard]] const std::vector<std::uint64_t> &members() const noexcept {
        return members_;
    }
    [[nodiscard]] bool contains(std::uint64_t value) const;
    [[nodiscard]] EventSubset complement() const;
    [[nodiscard]] EventSubset united(const EventSubset &other) const;
    [[nodiscard]] EventSubset intersected(const EventSubset &other) const;
    [[nodiscard]] bool disjoint(const EventSubset &other) const;
    [[nodiscard]] bool subset_of(const EventSubset &other) const;

  private:
    EventSubset(std::size_t ground_bits, std::vector<std::uint64_t> sorted, int)
        : ground_bits_(ground_bits), members_(std::move(sorted)) {}
    std::size_t ground_bits_;
    std::vector<std::uint64_t> members_;
};

/// mu_{F_x}(A) = sum_{y in A} F_x(y), summed in ascending y order.
/// Throws UnknownInput, GroundMismatch.
double induced_measure(const StochasticOutput &f, const BitString &x,
                       const EventSubset &a);

struct KolmogorovReport {
    double empty_measure = 0.0;
    double full_measure = 0.0;
    double max_complement_violation = 0.0;
    double max_additivity_violation = 0.0;
    std::size_t trials = 0;

    [[nodiscard]] double max_violation() const;
};

/// Checks mu(empty)=0, mu(full)=1, mu(A^c)=1-mu(A) and finite additivity
/// on `trials` seeded random disjoint pairs.
KolmogorovReport check_kolmogorov(const StochasticOutput &f, const BitString &x,
                                  std::size_t trials, std::uint64_t seed = 0);

/// Draws `count` outputs from F_x with a seeded generator.
std::vector<BitString> sample_outputs(const StochasticOutput &f, const BitString &x,
                                      std::size_t count, std::uint64_t seed);

/// {"M": m, "N": n, "rows": {"01": [...], ...}}
StochasticOutput stochastic_from_json(const Json &j,
                                      double tolerance = kDefaultTolerance);
Json stochastic_to_json(const StochasticOutput &f);

} // namespace qclogic::classical
