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

#include "qclogic/json_format.hpp"
#include "qclogic/qcore/matrix.hpp"

namespace qclogic::qcore {

/// {"dim": n, "re": [...], "im": [...]}, row-major, n*n entries each.
Json matrix_to_json(const ComplexMatrix &m);

/// Inverse of matrix_to_json. "im" may be omitted for real matrices.
/// Throws ParseError on malformed literals and SizeCapExceeded when dim
/// exceeds `max_dim`.
ComplexMatrix matrix_from_json(const Json &j, std::size_t max_dim = 1024);

} // namespace qclogic::qcore
