// Copyright 2026 The Annograph Authors.
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

#ifndef ANNOGRAPH_VALIDATION_H_
#define ANNOGRAPH_VALIDATION_H_

#include <string>
#include <string_view>
#include <vector>

namespace annograph {

enum class ViolationKind {
  kCycle,
  kOrphanNode,
  kTimeOrderViolation,
  kDanglingReference,
  kUnknownAnchor,
  kUnknownSignalGroup,
  kDimensionMismatch,
  kInvalidRegion,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  // Offending ids, most specific first.
  std::vector<std::string> ids;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

// An empty report means the checked object is well-formed.
using ValidationReport = std::vector<Violation>;

// "KIND id[,id...] detail"
std::string FormatViolation(const Violation& violation);

}  // namespace annograph

#endif  // ANNOGRAPH_VALIDATION_H_
