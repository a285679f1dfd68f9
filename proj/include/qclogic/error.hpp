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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qclogic {

/// Default absolute tolerance for validation and matrix comparisons
/// (max-entry norm).
inline constexpr double kDefaultTolerance = 1e-9;

enum class ErrorKind {
    DimensionMismatch,
    ValidationFailure,
    NonRealTrace,
    NotOrthonormalFamily,
    NonAbelianAlgebra,
    ArityMismatch,
    UnknownInput,
    GroundMismatch,
    InvalidWire,
    UnknownGate,
    EnumerationCapExceeded,
    UnboundedParameter,
    HierarchyViolation,
    SizeCapExceeded,
    ClosureCapExceeded,
    ToleranceCollision,
    NotClosedUnderConjugation,
    LatticeMismatch,
    LawViolation,
    IndexOutOfRange,
    WidthMismatch,
    InvalidSpec,
    UnknownOutcome,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind
/// identifies the contract that was broken; the message is a human-readable
/// one-liner.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Raised when a value fails one of its type invariants. `invariant` names
/// the violated law (e.g. "trace", "self_adjoint") and `magnitude` is the
/// size of the violation in the norm that law is checked with.
class ValidationFailure : public Error {
  public:
    ValidationFailure(std::string invariant, double magnitude, const std::string &detail = {});

    [[nodiscard]] const std::string &invariant() const noexcept {
        return invariant_;
    }
    [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

  private:
    std::string invariant_;
    double magnitude_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

} // namespace qclogic
