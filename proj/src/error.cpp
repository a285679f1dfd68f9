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

#include "qclogic/error.hpp"

#include <sstream>

namespace qclogic {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::NonRealTrace: return "NonRealTrace";
    case ErrorKind::NotOrthonormalFamily: return "NotOrthonormalFamily";
    case ErrorKind::NonAbelianAlgebra: return "NonAbelianAlgebra";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownInput: return "UnknownInput";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::InvalidWire: return "InvalidWire";
    case ErrorKind::UnknownGate: return "UnknownGate";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::UnboundedParameter: return "UnboundedParameter";
    case ErrorKind::HierarchyViolation: return "HierarchyViolation";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::ToleranceCollision: return "ToleranceCollision";
    case ErrorKind::NotClosedUnderConjugation: return "NotClosedUnderConjugation";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::UnknownOutcome: return "UnknownOutcome";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

namespace {
std::string validation_message(const std::string &invariant, double magnitude,
                               const std::string &detail) {
    std::ostringstream os;
    if (!detail.empty()) os << detail << ": ";
    os << "invariant '" << invariant << "' violated by " << magnitude;
    return os.str();
}
} // namespace

ValidationFailure::ValidationFailure(std::string invariant, double magnitude,
                                     const std::string &detail)
    : Error(ErrorKind::ValidationFailure, validation_message(invariant, magnitude, detail)),
      invariant_(std::move(invariant)), magnitude_(magnitude) {}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

} // namespace qclogic
