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

#ifndef ANNOGRAPH_GRAPH_H_
#define ANNOGRAPH_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annograph/content.h"
#include "annograph/decimal.h"
#include "annograph/validation.h"

namespace annograph {

// A set of signals sharing one notion of time. Offsets on one timeline are
// totally ordered; offsets on different timelines are incomparable.
struct Timeline {
  std::string id;
  std::vector<std::string> unit_names{""};

  int dimensionality() const { return static_cast<int>(unit_names.size()); }

  bool operator==(const Timeline&) const = default;
};

// Metadata for an external signal. The location is never dereferenced.
struct SignalDescriptor {
  std::string id;
  std::optional<std::string> format;
  std::optional<std::string> arc_types;
  std::optional<std::string> location;
  std::optional<std::string> signal_class;
  std::optional<std::string> encoding;
  std::optional<std::string> comment;

  bool operator==(const SignalDescriptor&) const = default;
};

struct Node {
  std::string id;
  std::string timeline;
  std::optional<Decimal> offset;

  bool operator==(const Node& other) const {
    return id == other.id && timeline == other.timeline &&
           offset.has_value() == other.offset.has_value() &&
           (!offset || offset->text() == other.offset->text());
  }
};

struct Arc {
  std::string id;
  std::string start;
  std::string end;
  std::string type;
  Content content;

  bool operator==(const Arc&) const = default;
};

struct SplitArcResult {
  std::string first_arc;
  std::string second_arc;
  std::string node;
};

// A labeled acyclic digraph whose nodes may carry offsets into timelines.
//
// The checked mutators (InsertArc, SplitArc, AnchorNode, RemoveArc,
// MergeArcs) keep a well-formed graph well-formed and either succeed or
// throw annograph::Error leaving the graph untouched. The mutable_*
// accessors bypass every check; readers use them to load documents as they
// are, and Validate() reports what is wrong.
//
// Single writer, any number of readers while no write is in progress.
class AnnotationGraph {
 public:
  AnnotationGraph() = default;

  // Adds a timeline. Throws kDuplicateId.
  void AddTimeline(Timeline timeline);

  // Adds signal metadata. Throws kDuplicateId.
  void AddSignal(SignalDescriptor signal);

  // Adds a node and returns its id (fresh when `id` is empty). A node stays
  // an orphan, and fails validation, until an arc is attached.
  // Throws kUnknownTimeline, kDuplicateId.
  std::string AddNode(std::string_view timeline,
                      std::optional<Decimal> offset = std::nullopt,
                      std::string id = {});

  // Adds an arc n1 -> n2. Throws kUnknownNode, kCycleIntroduced,
  // kTimeOrderViolation, kDuplicateId.
  std::string InsertArc(std::string_view n1, std::string_view n2,
                        std::string type, Content content,
                        std::string id = {});

  // Replaces `arc` with start -> m -> end through a fresh unanchored node m
  // on the start node's timeline. The first new arc keeps the content; the
  // second gets an empty feature set, and xrefs to `arc` move to the first.
  // Throws kUnknownArc.
  SplitArcResult SplitArc(std::string_view arc);

  // Inverse of SplitArc: joins `first` (x -> m) and `second` (m -> y) into
  // one arc x -> y keeping the id and content of `first`; xrefs to `second`
  // move to `first`. Both arcs must
  // have the same type and m must have no other arcs. Throws kUnknownArc,
  // kNotMergeable.
  std::string MergeArcs(std::string_view first, std::string_view second);

  // Sets a node's offset. Throws kUnknownNode, kTimeOrderViolation.
  void AnchorNode(std::string_view node, Decimal offset);

  // Removes an arc and any endpoint left without arcs. Throws kUnknownArc.
  void RemoveArc(std::string_view arc);

  const std::map<std::string, Timeline>& timelines() const { return timelines_; }
  const std::map<std::string, SignalDescriptor>& signals() const {
    return signals_;
  }
  const std::map<std::string, Node>& nodes() const { return nodes_; }
  const std::map<std::string, Arc>& arcs() const { return arcs_; }

  const Node* FindNode(std::string_view id) const;
  const Arc* FindArc(std::string_view id) const;

  // Unchecked access.
  std::map<std::string, Timeline>& mutable_timelines() { return timelines_; }
  std::map<std::string, SignalDescriptor>& mutable_signals() { return signals_; }
  std::map<std::string, Node>& mutable_nodes() { return nodes_; }
  std::map<std::string, Arc>& mutable_arcs() { return arcs_; }

  bool empty() const { return nodes_.empty() && arcs_.empty(); }

  bool operator==(const AnnotationGraph& other) const {
    return timelines_ == other.timelines_ && signals_ == other.signals_ &&
           nodes_ == other.nodes_ && arcs_ == other.arcs_;
  }

 private:
  // True when `id` names a node, arc, timeline or signal.
  bool IdInUse(std::string_view id) const;
  std::string FreshId();
  void CheckNewId(const std::string& id) const;

  std::map<std::string, Timeline> timelines_;
  std::map<std::string, SignalDescriptor> signals_;
  std::map<std::string, Node> nodes_;
  std::map<std::string, Arc> arcs_;
  uint64_t next_id_ = 1;
};

// Checks acyclicity, absence of orphan nodes, offset monotonicity along
// every path between anchored nodes of one timeline, and xref resolution.
// Never throws.
ValidationReport Validate(const AnnotationGraph& graph);

// Reports every xref target that is not an arc id. Xref cycles are fine.
ValidationReport ResolveXrefs(const AnnotationGraph& graph);

}  // namespace annograph

#endif  // ANNOGRAPH_GRAPH_H_
