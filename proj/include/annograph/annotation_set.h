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

#ifndef ANNOGRAPH_ANNOTATION_SET_H_
#define ANNOGRAPH_ANNOTATION_SET_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "annograph/content.h"
#include "annograph/decimal.h"
#include "annograph/graph.h"
#include "annograph/validation.h"

namespace annograph {

// Signals sharing one n-dimensional coordinate space; the generalization
// of a timeline.
struct SignalGroup {
  std::string id;
  std::vector<std::string> signals;
  std::vector<std::string> unit_names{""};

  int dimensionality() const { return static_cast<int>(unit_names.size()); }

  bool operator==(const SignalGroup&) const = default;
};

// An identified point in a signal group's space. Regions refer to anchors
// by id, so moving an anchor moves every region that uses it.
struct Anchor {
  std::string id;
  std::string signal_group;
  std::optional<std::vector<Decimal>> offsets;

  bool operator==(const Anchor& other) const;
};

enum class RegionKind { kInterval, kBox, kPolygon, kPolytope };

std::string_view RegionKindName(RegionKind kind);

struct Region {
  RegionKind kind = RegionKind::kInterval;
  std::vector<std::string> anchors;

  bool operator==(const Region&) const = default;
};

struct Annotation {
  std::string id;
  std::string type;
  Region region;
  Content content;

  bool operator==(const Annotation&) const = default;
};

struct SplitAnnotationResult {
  std::string first;
  std::string second;
  std::string anchor;
};

namespace select {

struct ByType {
  std::string type;
};
struct ByFeature {
  std::string feature;
  Content value;
};
struct BySignalGroup {
  std::string group;
};

}  // namespace select

using SelectionCriterion =
    std::variant<select::ByType, select::ByFeature, select::BySignalGroup>;

// A collection of annotations over regions of n-dimensional signal spaces.
//
// All query results are ordered by ascending id. Mutators throw
// annograph::Error and leave the set unchanged on failure. Offsets and
// anchor sharing are not checked for ordering here; ValidateSet() reports
// reversed intervals.
class AnnotationSet {
 public:
  explicit AnnotationSet(std::string id = {}) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }

  void AddSignalGroup(SignalGroup group);
  void AddSignal(SignalDescriptor signal);

  // Throws kUnknownSignalGroup, kDimensionMismatch, kDuplicateId.
  std::string AddAnchor(std::string_view group,
                        std::optional<std::vector<Decimal>> offsets = std::nullopt,
                        std::string id = {});

  // Throws kUnknownAnchor, kDimensionMismatch.
  void SetAnchorOffset(std::string_view anchor, std::vector<Decimal> offsets);

  // Annotations whose region ends (last anchor) at `anchor`.
  std::vector<std::string> GetIncoming(std::string_view anchor) const;
  // Annotations whose region starts (first anchor) at `anchor`.
  std::vector<std::string> GetOutgoing(std::string_view anchor) const;

  std::string GetStart(std::string_view annotation) const;

  // Replaces the region's first anchor. An anchor left unreferenced by the
  // change is dropped. Throws kUnknownAnnotation, kUnknownAnchor,
  // kSignalGroupMismatch.
  void SetStart(std::string_view annotation, std::string_view anchor);

  // Throws kUnknownAnnotation. See Content::SetFeature.
  void SetFeature(std::string_view annotation, std::string_view feature,
                  Content value);

  // Stores the annotation under its own id, or a fresh one when empty.
  // Throws kUnknownAnchor, kSignalGroupMismatch, kInvalidRegion,
  // kDuplicateId.
  std::string AddAnnotation(Annotation annotation);

  // Splits an interval annotation into two adjacent ones sharing a fresh
  // unanchored anchor; the first keeps the content and inherits xrefs to
  // the original, the second gets an empty feature set. Throws kUnknownAnnotation, kUnsupportedRegionKind.
  SplitAnnotationResult SplitAnnotation(std::string_view annotation);

  // Removes an annotation and every anchor no longer used by any region.
  // Throws kUnknownAnnotation.
  void RemoveAnnotation(std::string_view annotation);

  // Anchors whose offsets equal `offsets` numerically.
  std::vector<std::string> AnchorsAtOffset(const std::vector<Decimal>& offsets) const;

  std::vector<std::string> Select(const SelectionCriterion& criterion) const;

  const std::map<std::string, SignalGroup>& signal_groups() const {
    return signal_groups_;
  }
  const std::map<std::string, SignalDescriptor>& signals() const {
    return signals_;
  }
  const std::map<std::string, Anchor>& anchors() const { return anchors_; }
  const std::map<std::string, Annotation>& annotations() const {
    return annotations_;
  }

  const Anchor* FindAnchor(std::string_view id) const;
  const Annotation* FindAnnotation(std::string_view id) const;

  // Unchecked access.
  std::map<std::string, Anchor>& mutable_anchors() { return anchors_; }
  std::map<std::string, Annotation>& mutable_annotations() {
    return annotations_;
  }

  bool operator==(const AnnotationSet&) const = default;

 private:
  bool IdInUse(std::string_view id) const;
  std::string FreshId();
  // Checks region shape against its anchors; throws on failure.
  void CheckRegion(const Region& region) const;
  void DropUnusedAnchor(const std::string& anchor);
  Annotation& MustFind(std::string_view annotation);

  std::string id_;
  std::map<std::string, SignalGroup> signal_groups_;
  std::map<std::string, SignalDescriptor> signals_;
  std::map<std::string, Anchor> anchors_;
  std::map<std::string, Annotation> annotations_;
  uint64_t next_id_ = 1;
};

// Reports unknown anchors and signal groups, offset arity mismatches,
// badly shaped regions, dangling xrefs, and intervals whose start offset
// exceeds their end offset. Never throws.
ValidationReport ValidateSet(const AnnotationSet& set);

// Linear-case reduction: node <-> anchor, arc <-> interval annotation,
// timeline <-> 1-D signal group. Ids are preserved in both directions.
AnnotationSet FromGraph(const AnnotationGraph& graph);

// Throws kUnsupportedRegionKind for non-interval regions and kInvalidGraph
// (carrying the report) when the resulting graph fails Validate().
AnnotationGraph ToGraph(const AnnotationSet& set);

}  // namespace annograph

#endif  // ANNOGRAPH_ANNOTATION_SET_H_
