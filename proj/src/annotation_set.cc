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

#include "annograph/annotation_set.h"

#include <algorithm>

#include "annograph/errors.h"

namespace annograph {
namespace {

bool SameOffsets(const std::optional<std::vector<Decimal>>& a,
                 const std::optional<std::vector<Decimal>>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return std::equal(a->begin(), a->end(), b->begin(), b->end(),
                    [](const Decimal& x, const Decimal& y) {
                      return x.text() == y.text();
                    });
}

// Empty when the kind fits the anchor count and dimensionality.
std::string ShapeProblem(RegionKind kind, size_t anchors, int dims) {
  switch (kind) {
    case RegionKind::kInterval:
      if (dims == 1 && anchors == 2) return {};
      return "interval needs 2 anchors in 1-D";
    case RegionKind::kBox:
      if (dims >= 2 && anchors == 2) return {};
      return "box needs 2 corner anchors in 2-D or more";
    case RegionKind::kPolygon:
      if (dims == 2 && anchors >= 3) return {};
      return "polygon needs 3 or more anchors in 2-D";
    case RegionKind::kPolytope:
      if (dims >= 3 && anchors >= 2) return {};
      return "polytope needs 2 or more anchors in 3-D or more";
  }
  return "unknown region kind";
}

}  // namespace

bool Anchor::operator==(const Anchor& other) const {
  return id == other.id && signal_group == other.signal_group &&
         SameOffsets(offsets, other.offsets);
}

std::string_view RegionKindName(RegionKind kind) {
  switch (kind) {
    case RegionKind::kInterval: return "interval";
    case RegionKind::kBox: return "box";
    case RegionKind::kPolygon: return "polygon";
    case RegionKind::kPolytope: return "polytope";
  }
  return "unknown";
}

bool AnnotationSet::IdInUse(std::string_view id) const {
  std::string key(id);
  return anchors_.count(key) || annotations_.count(key) ||
         signal_groups_.count(key) || signals_.count(key);
}

std::string AnnotationSet::FreshId() {
  std::string id;
  do {
    id = "g" + std::to_string(next_id_++);
  } while (IdInUse(id));
  return id;
}

void AnnotationSet::AddSignalGroup(SignalGroup group) {
  if (group.unit_names.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "signal group " + group.id + " needs at least one dimension");
  }
  if (signal_groups_.count(group.id) || anchors_.count(group.id) ||
      annotations_.count(group.id)) {
    throw Error(ErrorCode::kDuplicateId, "signal group " + group.id);
  }
  std::string id = group.id;
  signal_groups_.emplace(std::move(id), std::move(group));
}

void AnnotationSet::AddSignal(SignalDescriptor signal) {
  if (signals_.count(signal.id) || anchors_.count(signal.id) ||
      annotations_.count(signal.id)) {
    throw Error(ErrorCode::kDuplicateId, "signal " + signal.id);
  }
  std::string id = signal.id;
  signals_.emplace(std::move(id), std::move(signal));
}

const Anchor* AnnotationSet::FindAnchor(std::string_view id) const {
  auto it = anchors_.find(std::string(id));
  return it == anchors_.end() ? nullptr : &it->second;
}

const Annotation* AnnotationSet::FindAnnotation(std::string_view id) const {
  auto it = annotations_.find(std::string(id));
  return it == annotations_.end() ? nullptr : &it->second;
}

Annotation& AnnotationSet::MustFind(std::string_view annotation) {
  auto it = annotations_.find(std::string(annotation));
  if (it == annotations_.end()) {
    throw Error(ErrorCode::kUnknownAnnotation, std::string(annotation));
  }
  return it->second;
}

std::string AnnotationSet::AddAnchor(std::string_view group,
                                     std::optional<std::vector<Decimal>> offsets,
                                     std::string id) {
  auto g = signal_groups_.find(std::string(group));
  if (g == signal_groups_.end()) {
    throw Error(ErrorCode::kUnknownSignalGroup, std::string(group));
  }
  if (offsets && static_cast<int>(offsets->size()) != g->second.dimensionality()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(offsets->size()) + " offsets for " +
                    std::to_string(g->second.dimensionality()) + "-D group " +
                    g->first);
  }
  if (id.empty()) {
    id = FreshId();
  } else if (IdInUse(id)) {
    throw Error(ErrorCode::kDuplicateId, id);
  }
  anchors_.emplace(id, Anchor{id, g->first, std::move(offsets)});
  return id;
}

void AnnotationSet::SetAnchorOffset(std::string_view anchor,
                                    std::vector<Decimal> offsets) {
  auto it = anchors_.find(std::string(anchor));
  if (it == anchors_.end()) {
    throw Error(ErrorCode::kUnknownAnchor, std::string(anchor));
  }
  int dims = 1;
  if (auto g = signal_groups_.find(it->second.signal_group);
      g != signal_groups_.end()) {
    dims = g->second.dimensionality();
  }
  if (static_cast<int>(offsets.size()) != dims) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(offsets.size()) + " offsets for " +
                    std::to_string(dims) + "-D anchor " + it->first);
  }
  it->second.offsets = std::move(offsets);
}

std::vector<std::string> AnnotationSet::GetIncoming(std::string_view anchor) const {
  if (!FindAnchor(anchor)) throw Error(ErrorCode::kUnknownAnchor, std::string(anchor));
  std::vector<std::string> out;
  for (const auto& [id, ann] : annotations_) {
    if (!ann.region.anchors.empty() && ann.region.anchors.back() == anchor) {
      out.push_back(id);
    }
  }
  return out;
}

std::vector<std::string> AnnotationSet::GetOutgoing(std::string_view anchor) const {
  if (!FindAnchor(anchor)) throw Error(ErrorCode::kUnknownAnchor, std::string(anchor));
  std::vector<std::string> out;
  for (const auto& [id, ann] : annotations_) {
    if (!ann.region.anchors.empty() && ann.region.anchors.front() == anchor) {
      out.push_back(id);
    }
  }
  return out;
}

std::string AnnotationSet::GetStart(std::string_view annotation) const {
  const Annotation* ann = FindAnnotation(annotation);
  if (ann == nullptr) {
    throw Error(ErrorCode::kUnknownAnnotation, std::string(annotation));
  }
  return ann->region.anchors.front();
}

void AnnotationSet::CheckRegion(const Region& region) const {
  std::string group;
  for (const std::string& anchor_id : region.anchors) {
    const Anchor* anchor = FindAnchor(anchor_id);
    if (anchor == nullptr) throw Error(ErrorCode::kUnknownAnchor, anchor_id);
    if (group.empty()) {
      group = anchor->signal_group;
    } else if (anchor->signal_group != group) {
      throw Error(ErrorCode::kSignalGroupMismatch,
                  "anchor " + anchor_id + " is in " + anchor->signal_group +
                      ", region is in " + group);
    }
  }
  int dims = 0;
  if (auto g = signal_groups_.find(group); g != signal_groups_.end()) {
    dims = g->second.dimensionality();
  }
  if (std::string problem = ShapeProblem(region.kind, region.anchors.size(), dims);
      !problem.empty()) {
    throw Error(ErrorCode::kInvalidRegion, problem);
  }
  if (region.kind == RegionKind::kInterval &&
      region.anchors.front() == region.anchors.back()) {
    throw Error(ErrorCode::kInvalidRegion, "interval starts and ends at " +
                                               region.anchors.front());
  }
}

void AnnotationSet::DropUnusedAnchor(const std::string& anchor) {
  bool used = std::any_of(annotations_.begin(), annotations_.end(),
                          [&](const auto& kv) {
                            const auto& refs = kv.second.region.anchors;
                            return std::find(refs.begin(), refs.end(), anchor) !=
                                   refs.end();
                          });
  if (!used) anchors_.erase(anchor);
}

void AnnotationSet::SetStart(std::string_view annotation,
                             std::string_view anchor) {
  Annotation& ann = MustFind(annotation);
  if (!FindAnchor(anchor)) throw Error(ErrorCode::kUnknownAnchor, std::string(anchor));
  Region region = ann.region;
  std::string previous = region.anchors.front();
  if (previous == anchor) return;
  region.anchors.front() = std::string(anchor);
  CheckRegion(region);
  ann.region = std::move(region);
  DropUnusedAnchor(previous);
}

void AnnotationSet::SetFeature(std::string_view annotation,
                               std::string_view feature, Content value) {
  MustFind(annotation).content.SetFeature(feature, std::move(value));
}

std::string AnnotationSet::AddAnnotation(Annotation annotation) {
  if (!annotation.id.empty() && IdInUse(annotation.id)) {
    throw Error(ErrorCode::kDuplicateId, annotation.id);
  }
  CheckRegion(annotation.region);
  if (annotation.id.empty()) annotation.id = FreshId();
  std::string id = annotation.id;
  annotations_.emplace(id, std::move(annotation));
  return id;
}

SplitAnnotationResult AnnotationSet::SplitAnnotation(std::string_view annotation) {
  Annotation& original = MustFind(annotation);
  if (original.region.kind != RegionKind::kInterval) {
    throw Error(ErrorCode::kUnsupportedRegionKind,
                std::string(RegionKindName(original.region.kind)) +
                    " regions cannot be split");
  }
  const Anchor* start = FindAnchor(original.region.anchors.front());
  if (start == nullptr) {
    throw Error(ErrorCode::kUnknownAnchor, original.region.anchors.front());
  }
  Annotation moved = std::move(original);
  annotations_.erase(moved.id);

  SplitAnnotationResult result;
  result.anchor = FreshId();
  result.first = FreshId();
  result.second = FreshId();
  anchors_.emplace(result.anchor,
                   Anchor{result.anchor, start->signal_group, std::nullopt});
  const std::string begin = moved.region.anchors.front();
  const std::string end = moved.region.anchors.back();
  annotations_.emplace(
      result.first,
      Annotation{result.first, moved.type,
                 Region{RegionKind::kInterval, {begin, result.anchor}},
                 std::move(moved.content)});
  annotations_.emplace(
      result.second,
      Annotation{result.second, moved.type,
                 Region{RegionKind::kInterval, {result.anchor, end}},
                 Content(FeatureSet{})});
  for (auto& [id, ann] : annotations_) {
    ann.content.RetargetXrefs(moved.id, result.first);
  }
  return result;
}

void AnnotationSet::RemoveAnnotation(std::string_view annotation) {
  Annotation& ann = MustFind(annotation);
  std::vector<std::string> anchors = ann.region.anchors;
  std::string id = ann.id;
  annotations_.erase(id);
  for (const std::string& anchor : anchors) DropUnusedAnchor(anchor);
}

std::vector<std::string> AnnotationSet::AnchorsAtOffset(
    const std::vector<Decimal>& offsets) const {
  std::vector<std::string> out;
  for (const auto& [id, anchor] : anchors_) {
    if (anchor.offsets && *anchor.offsets == offsets) out.push_back(id);
  }
  return out;
}

std::vector<std::string> AnnotationSet::Select(
    const SelectionCriterion& criterion) const {
  auto group_of = [&](const Annotation& ann) -> std::string {
    if (ann.region.anchors.empty()) return {};
    const Anchor* anchor = FindAnchor(ann.region.anchors.front());
    return anchor ? anchor->signal_group : std::string();
  };
  auto matches = [&](const Annotation& ann) {
    if (auto* by_type = std::get_if<select::ByType>(&criterion)) {
      return ann.type == by_type->type;
    }
    if (auto* by_feature = std::get_if<select::ByFeature>(&criterion)) {
      if (!ann.content.is_feature_set()) return false;
      const FeatureSet& fs = ann.content.features();
      return std::any_of(fs.begin(), fs.end(), [&](const Field& field) {
        return field.feature == by_feature->feature &&
               field.value == by_feature->value;
      });
    }
    return group_of(ann) == std::get<select::BySignalGroup>(criterion).group;
  };
  std::vector<std::string> out;
  for (const auto& [id, ann] : annotations_) {
    if (matches(ann)) out.push_back(id);
  }
  return out;
}

ValidationReport ValidateSet(const AnnotationSet& set) {
  ValidationReport report;
  for (const auto& [id, anchor] : set.anchors()) {
    auto g = set.signal_groups().find(anchor.signal_group);
    if (g == set.signal_groups().end()) {
      report.push_back({ViolationKind::kUnknownSignalGroup,
                        {anchor.signal_group}, "group of anchor " + id});
      continue;
    }
    if (anchor.offsets &&
        static_cast<int>(anchor.offsets->size()) != g->second.dimensionality()) {
      report.push_back({ViolationKind::kDimensionMismatch, {id},
                        std::to_string(anchor.offsets->size()) +
                            " offsets in " +
                            std::to_string(g->second.dimensionality()) +
                            "-D group " + g->first});
    }
  }

  for (const auto& [id, ann] : set.annotations()) {
    bool resolved = true;
    for (const std::string& anchor : ann.region.anchors) {
      if (!set.anchors().count(anchor)) {
        report.push_back({ViolationKind::kUnknownAnchor, {anchor},
                          "used by annotation " + id});
        resolved = false;
      }
    }
    if (resolved) {
      std::string group;
      bool mixed = false;
      for (const std::string& anchor : ann.region.anchors) {
        const std::string& g = set.anchors().at(anchor).signal_group;
        if (group.empty()) group = g;
        mixed |= g != group;
      }
      int dims = 0;
      if (auto g = set.signal_groups().find(group); g != set.signal_groups().end()) {
        dims = g->second.dimensionality();
      }
      std::string problem =
          mixed ? "anchors span several signal groups"
                : ShapeProblem(ann.region.kind, ann.region.anchors.size(), dims);
      if (problem.empty() && ann.region.kind == RegionKind::kInterval &&
          ann.region.anchors.front() == ann.region.anchors.back()) {
        problem = "interval starts and ends at the same anchor";
      }
      if (!problem.empty()) {
        report.push_back({ViolationKind::kInvalidRegion, {id}, problem});
      } else if (ann.region.kind == RegionKind::kInterval) {
        const Anchor& first = set.anchors().at(ann.region.anchors.front());
        const Anchor& last = set.anchors().at(ann.region.anchors.back());
        if (first.offsets && last.offsets && first.offsets->size() == 1 &&
            last.offsets->size() == 1 &&
            first.offsets->front() > last.offsets->front()) {
          report.push_back({ViolationKind::kTimeOrderViolation,
                            {id, first.id, last.id},
                            "interval runs from " + first.offsets->front().text() +
                                " back to " + last.offsets->front().text()});
        }
      }
    }
    std::vector<std::string> targets;
    ann.content.CollectXrefs(&targets);
    for (const std::string& target : targets) {
      if (!set.annotations().count(target)) {
        report.push_back({ViolationKind::kDanglingReference, {target},
                          "referenced by annotation " + id});
      }
    }
  }
  return report;
}

AnnotationSet FromGraph(const AnnotationGraph& graph) {
  AnnotationSet set;
  for (const auto& [id, signal] : graph.signals()) set.AddSignal(signal);
  for (const auto& [id, timeline] : graph.timelines()) {
    SignalGroup group{id, {}, timeline.unit_names};
    if (graph.signals().count(id)) group.signals.push_back(id);
    set.AddSignalGroup(std::move(group));
  }
  auto& anchors = set.mutable_anchors();
  for (const auto& [id, node] : graph.nodes()) {
    std::optional<std::vector<Decimal>> offsets;
    if (node.offset) offsets = std::vector<Decimal>{*node.offset};
    anchors.emplace(id, Anchor{id, node.timeline, std::move(offsets)});
  }
  auto& annotations = set.mutable_annotations();
  for (const auto& [id, arc] : graph.arcs()) {
    annotations.emplace(
        id, Annotation{id, arc.type,
                       Region{RegionKind::kInterval, {arc.start, arc.end}},
                       arc.content});
  }
  return set;
}

AnnotationGraph ToGraph(const AnnotationSet& set) {
  for (const auto& [id, ann] : set.annotations()) {
    if (ann.region.kind != RegionKind::kInterval || ann.region.anchors.size() != 2) {
      throw Error(ErrorCode::kUnsupportedRegionKind,
                  "annotation " + id + " has a " +
                      std::string(RegionKindName(ann.region.kind)) + " region");
    }
  }
  for (const auto& [id, group] : set.signal_groups()) {
    if (group.dimensionality() != 1) {
      throw Error(ErrorCode::kUnsupportedRegionKind,
                  "signal group " + id + " is not one-dimensional");
    }
  }

  AnnotationGraph graph;
  for (const auto& [id, signal] : set.signals()) {
    graph.mutable_signals().emplace(id, signal);
  }
  for (const auto& [id, group] : set.signal_groups()) {
    graph.mutable_timelines().emplace(id, Timeline{id, group.unit_names});
  }
  for (const auto& [id, anchor] : set.anchors()) {
    std::optional<Decimal> offset;
    if (anchor.offsets && !anchor.offsets->empty()) offset = anchor.offsets->front();
    graph.mutable_nodes().emplace(id, Node{id, anchor.signal_group, offset});
  }
  for (const auto& [id, ann] : set.annotations()) {
    graph.mutable_arcs().emplace(
        id, Arc{id, ann.region.anchors.front(), ann.region.anchors.back(),
                ann.type, ann.content});
  }
  ValidationReport report = Validate(graph);
  if (!report.empty()) {
    std::string message = std::to_string(report.size()) +
                          " violation(s), first: " + FormatViolation(report.front());
    throw Error(ErrorCode::kInvalidGraph, message, std::move(report));
  }
  return graph;
}

}  // namespace annograph
