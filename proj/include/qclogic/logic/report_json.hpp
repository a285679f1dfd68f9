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
#include "qclogic/logic/quotient.hpp"
#include "qclogic/logic/relations.hpp"

namespace qclogic::logic {

/// {relation, holds, lhs, rhs, theta?, witness?: {state?, event?}, tolerance}
Json report_to_json(const EquivalenceReport &r);
Json hierarchy_to_json(const HierarchyReport &r);
Json quotient_to_json(const QuotientPartition &q);

} // namespace qclogic::logic
