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

#include "annograph/errors.h"
#include "annograph/validation.h"

namespace annograph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kUnknownArc: return "UnknownArc";
    case ErrorCode::kUnknownTimeline: return "UnknownTimeline";
    case ErrorCode::kCycleIntroduced: return "CycleIntroduced";
    case ErrorCode::kTimeOrderViolation: return "TimeOrderViolation";
    case ErrorCode::kNotMergeable: return "NotMergeable";
    case ErrorCode::kUnknownAnchor: return "UnknownAnchor";
    case ErrorCode::kUnknownAnnotation: return "UnknownAnnotation";
    case ErrorCode::kUnknownSignalGroup: return "UnknownSignalGroup";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSignalGroupMismatch: return "SignalGroupMismatch";
    case ErrorCode::kUnsupportedRegionKind: return "UnsupportedRegionKind";
    case ErrorCode::kInvalidRegion: return "InvalidRegion";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kInvalidDocument: return "InvalidDocument";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kDanglingNodeRef: return "DanglingNodeRef";
    case ErrorCode::kDanglingXref: return "DanglingXref";
    case ErrorCode::kUnitConflict: return "UnitConflict";
    case ErrorCode::kInvalidOffset: return "InvalidOffset";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kNonIntegerOffset: return "NonIntegerOffset";
    case ErrorCode::kReversedInterval: return "ReversedInterval";
    case ErrorCode::kUnitMismatch: return "UnitMismatch";
    case ErrorCode::kUnanchoredNode: return "UnanchoredNode";
  }
  return "Unknown";
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kCycle: return "Cycle";
    case ViolationKind::kOrphanNode: return "OrphanNode";
    case ViolationKind::kTimeOrderViolation: return "TimeOrderViolation";
    case ViolationKind::kDanglingReference: return "DanglingReference";
    case ViolationKind::kUnknownAnchor: return "UnknownAnchor";
    case ViolationKind::kUnknownSignalGroup: return "UnknownSignalGroup";
    case ViolationKind::kDimensionMismatch: return "DimensionMismatch";
    case ViolationKind::kInvalidRegion: return "InvalidRegion";
  }
  return "Unknown";
}

std::string FormatViolation(const Violation& violation) {
  std::string line(ViolationKindName(violation.kind));
  line += ' ';
  for (size_t i = 0; i < violation.ids.size(); ++i) {
    if (i > 0) line += ',';
    line += violation.ids[i];
  }
  if (violation.ids.empty()) line += '-';
  if (!violation.detail.empty()) {
    line += ' ';
    line += violation.detail;
  }
  return line;
}

}  // namespace annograph
