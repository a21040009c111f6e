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

#ifndef ANNOGRAPH_TIMIT_H_
#define ANNOGRAPH_TIMIT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "annograph/graph.h"

namespace annograph {

inline constexpr std::string_view kDefaultTierUnits = "Samples16kHz";

struct TierRow {
  int64_t start = 0;
  int64_t end = 0;
  std::string label;

  bool operator==(const TierRow&) const = default;
};

// One layer of a column-format transcription ("start end label" lines).
struct ColumnTier {
  std::string source_name;
  std::string arc_type;
  std::vector<TierRow> rows;
  std::string units{kDefaultTierUnits};

  bool operator==(const ColumnTier&) const = default;
};

// Parses whitespace-separated "start end label" lines; blank lines are
// skipped and the label is the rest of the line. Throws kMalformedLine,
// kNonIntegerOffset or kReversedInterval with the 1-based line number.
ColumnTier ParseTier(std::string_view text, std::string arc_type,
                     std::string source_name = {},
                     std::string units = std::string(kDefaultTierUnits));

// One "start end label" line per row.
std::string SerializeTier(const ColumnTier& tier);

// Merges tiers onto one timeline. Each distinct offset becomes a single
// node "n<offset>", shared by every row that starts or ends there; each row
// becomes an arc of the tier's type with the label as literal content.
// Throws kUnitMismatch when the tiers disagree on units.
AnnotationGraph BuildGraph(const std::vector<ColumnTier>& tiers,
                           std::string_view timeline_id);

// Recovers one tier per arc type (ascending), rows ordered by start, end
// and label. Literal content becomes the label; other content its Summary().
// Throws kUnanchoredNode if an arc endpoint has no offset and
// kNonIntegerOffset for fractional offsets.
std::vector<ColumnTier> ExtractTiers(const AnnotationGraph& graph);

}  // namespace annograph

#endif  // ANNOGRAPH_TIMIT_H_
