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

#ifndef ANNOGRAPH_ERRORS_H_
#define ANNOGRAPH_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "annograph/validation.h"

namespace annograph {

enum class ErrorCode {
  // Graph and set mutators.
  kUnknownNode,
  kUnknownArc,
  kUnknownTimeline,
  kCycleIntroduced,
  kTimeOrderViolation,
  kNotMergeable,
  kUnknownAnchor,
  kUnknownAnnotation,
  kUnknownSignalGroup,
  kDimensionMismatch,
  kSignalGroupMismatch,
  kUnsupportedRegionKind,
  kInvalidRegion,
  kDuplicateId,
  kInvalidGraph,
  kInvalidArgument,
  // Document readers.
  kMalformedXml,
  kInvalidDocument,
  kUnknownElement,
  kDanglingNodeRef,
  kDanglingXref,
  kUnitConflict,
  kInvalidOffset,
  // Column tiers.
  kMalformedLine,
  kNonIntegerOffset,
  kReversedInterval,
  kUnitMismatch,
  kUnanchoredNode,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception. Operations that
// throw leave their target unchanged.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  Error(ErrorCode code, const std::string& message, int line)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": line " +
                           std::to_string(line) + ": " + message),
        code_(code),
        line_(line) {}

  Error(ErrorCode code, const std::string& message, ValidationReport report)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        report_(std::move(report)) {}

  ErrorCode code() const { return code_; }

  // Input line for reader errors, when known.
  std::optional<int> line() const { return line_; }

  // Violations that caused kInvalidGraph.
  const ValidationReport& report() const { return report_; }

 private:
  ErrorCode code_;
  std::optional<int> line_;
  ValidationReport report_;
};

}  // namespace annograph

#endif  // ANNOGRAPH_ERRORS_H_
