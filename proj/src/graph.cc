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

#include "annograph/graph.h"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "annograph/errors.h"

namespace annograph {
namespace {

// Arc lists per node, built on demand from the arc map.
struct Adjacency {
  std::unordered_map<std::string, std::vector<const Arc*>> out;
  std::unordered_map<std::string, std::vector<const Arc*>> in;

  explicit Adjacency(const std::map<std::string, Arc>& arcs) {
    for (const auto& [id, arc] : arcs) {
      out[arc.start].push_back(&arc);
      in[arc.end].push_back(&arc);
    }
  }

  const std::vector<const Arc*>& Out(const std::string& node) const {
    static const std::vector<const Arc*> kNone;
    auto it = out.find(node);
    return it == out.end() ? kNone : it->second;
  }
  const std::vector<const Arc*>& In(const std::string& node) const {
    static const std::vector<const Arc*> kNone;
    auto it = in.find(node);
    return it == in.end() ? kNone : it->second;
  }
};

enum class Direction { kForward, kBackward };

// Nodes reachable from `origin` by one or more arcs.
std::unordered_set<std::string> Reachable(const Adjacency& adj,
                                          const std::string& origin,
                                          Direction direction) {
  std::unordered_set<std::string> seen;
  std::deque<std::string> queue{origin};
  while (!queue.empty()) {
    std::string node = std::move(queue.front());
    queue.pop_front();
    const auto& arcs =
        direction == Direction::kForward ? adj.Out(node) : adj.In(node);
    for (const Arc* arc : arcs) {
      const std::string& next =
          direction == Direction::kForward ? arc->end : arc->start;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

// Extreme anchored offset per timeline over a node set.
struct Bound {
  Decimal offset;
  std::string node;
};

std::map<std::string, Bound> OffsetBounds(
    const std::map<std::string, Node>& nodes,
    const std::unordered_set<std::string>& members, bool want_max) {
  std::map<std::string, Bound> bounds;
  for (const std::string& id : members) {
    auto it = nodes.find(id);
    if (it == nodes.end() || !it->second.offset) continue;
    const Node& node = it->second;
    auto [slot, inserted] =
        bounds.try_emplace(node.timeline, Bound{*node.offset, node.id});
    if (inserted) continue;
    bool better = want_max ? *node.offset > slot->second.offset
                           : *node.offset < slot->second.offset;
    if (better) slot->second = Bound{*node.offset, node.id};
  }
  return bounds;
}

}  // namespace

bool AnnotationGraph::IdInUse(std::string_view id) const {
  std::string key(id);
  return nodes_.count(key) || arcs_.count(key) || timelines_.count(key) ||
         signals_.count(key);
}

std::string AnnotationGraph::FreshId() {
  std::string id;
  do {
    id = "g" + std::to_string(next_id_++);
  } while (IdInUse(id));
  return id;
}

void AnnotationGraph::CheckNewId(const std::string& id) const {
  if (IdInUse(id)) throw Error(ErrorCode::kDuplicateId, "id " + id + " in use");
}

void AnnotationGraph::AddTimeline(Timeline timeline) {
  if (timeline.unit_names.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "timeline " + timeline.id + " needs at least one dimension");
  }
  if (timelines_.count(timeline.id) || nodes_.count(timeline.id) ||
      arcs_.count(timeline.id)) {
    throw Error(ErrorCode::kDuplicateId, "timeline " + timeline.id);
  }
  std::string id = timeline.id;
  timelines_.emplace(std::move(id), std::move(timeline));
}

void AnnotationGraph::AddSignal(SignalDescriptor signal) {
  if (signals_.count(signal.id) || nodes_.count(signal.id) ||
      arcs_.count(signal.id)) {
    throw Error(ErrorCode::kDuplicateId, "signal " + signal.id);
  }
  std::string id = signal.id;
  signals_.emplace(std::move(id), std::move(signal));
}

const Node* AnnotationGraph::FindNode(std::string_view id) const {
  auto it = nodes_.find(std::string(id));
  return it == nodes_.end() ? nullptr : &it->second;
}

const Arc* AnnotationGraph::FindArc(std::string_view id) const {
  auto it = arcs_.find(std::string(id));
  return it == arcs_.end() ? nullptr : &it->second;
}

std::string AnnotationGraph::AddNode(std::string_view timeline,
                                     std::optional<Decimal> offset,
                                     std::string id) {
  if (!timelines_.count(std::string(timeline))) {
    throw Error(ErrorCode::kUnknownTimeline, std::string(timeline));
  }
  if (id.empty()) {
    id = FreshId();
  } else {
    CheckNewId(id);
  }
  nodes_.emplace(id, Node{id, std::string(timeline), std::move(offset)});
  return id;
}

std::string AnnotationGraph::InsertArc(std::string_view n1, std::string_view n2,
                                       std::string type, Content content,
                                       std::string id) {
  const Node* from = FindNode(n1);
  const Node* to = FindNode(n2);
  if (from == nullptr) throw Error(ErrorCode::kUnknownNode, std::string(n1));
  if (to == nullptr) throw Error(ErrorCode::kUnknownNode, std::string(n2));
  if (n1 == n2) {
    throw Error(ErrorCode::kCycleIntroduced,
                "self-loop on " + std::string(n1));
  }
  if (!id.empty()) CheckNewId(id);

  Adjacency adj(arcs_);
  std::unordered_set<std::string> after = Reachable(adj, to->id, Direction::kForward);
  if (after.count(from->id)) {
    throw Error(ErrorCode::kCycleIntroduced,
                from->id + " is reachable from " + to->id);
  }
  // Every new path runs from {n1} + ancestors(n1) to {n2} + descendants(n2).
  std::unordered_set<std::string> before =
      Reachable(adj, from->id, Direction::kBackward);
  before.insert(from->id);
  after.insert(to->id);
  auto latest = OffsetBounds(nodes_, before, /*want_max=*/true);
  auto earliest = OffsetBounds(nodes_, after, /*want_max=*/false);
  for (const auto& [timeline, hi] : latest) {
    auto lo = earliest.find(timeline);
    if (lo != earliest.end() && hi.offset > lo->second.offset) {
      throw Error(ErrorCode::kTimeOrderViolation,
                  "path " + hi.node + " -> " + lo->second.node +
                      " would run from " + hi.offset.text() + " back to " +
                      lo->second.offset.text());
    }
  }

  if (id.empty()) id = FreshId();
  arcs_.emplace(id, Arc{id, from->id, to->id, std::move(type),
                        std::move(content)});
  return id;
}

SplitArcResult AnnotationGraph::SplitArc(std::string_view arc_id) {
  auto it = arcs_.find(std::string(arc_id));
  if (it == arcs_.end()) throw Error(ErrorCode::kUnknownArc, std::string(arc_id));
  Arc original = it->second;

  std::string timeline;
  if (const Node* start = FindNode(original.start)) timeline = start->timeline;

  SplitArcResult result;
  result.node = FreshId();
  result.first_arc = FreshId();
  result.second_arc = FreshId();
  arcs_.erase(it);
  nodes_.emplace(result.node, Node{result.node, timeline, std::nullopt});
  arcs_.emplace(result.first_arc,
                Arc{result.first_arc, original.start, result.node,
                    original.type, std::move(original.content)});
  arcs_.emplace(result.second_arc,
                Arc{result.second_arc, result.node, original.end,
                    original.type, Content(FeatureSet{})});
  for (auto& [id, arc] : arcs_) arc.content.RetargetXrefs(original.id, result.first_arc);
  return result;
}

std::string AnnotationGraph::MergeArcs(std::string_view first,
                                       std::string_view second) {
  auto a = arcs_.find(std::string(first));
  if (a == arcs_.end()) throw Error(ErrorCode::kUnknownArc, std::string(first));
  auto b = arcs_.find(std::string(second));
  if (b == arcs_.end()) throw Error(ErrorCode::kUnknownArc, std::string(second));
  if (a == b) throw Error(ErrorCode::kNotMergeable, "same arc");
  if (a->second.end != b->second.start) {
    throw Error(ErrorCode::kNotMergeable, a->first + " does not end where " +
                                              b->first + " starts");
  }
  if (a->second.type != b->second.type) {
    throw Error(ErrorCode::kNotMergeable, "arc types differ");
  }
  if (a->second.start == b->second.end) {
    throw Error(ErrorCode::kNotMergeable, "result would be a self-loop");
  }
  const std::string middle = a->second.end;
  size_t degree = 0;
  for (const auto& [id, arc] : arcs_) {
    degree += (arc.start == middle) + (arc.end == middle);
  }
  if (degree != 2) {
    throw Error(ErrorCode::kNotMergeable,
                "interior node " + middle + " has other arcs");
  }
  a->second.end = b->second.end;
  const std::string absorbed = b->first;
  arcs_.erase(b);
  nodes_.erase(middle);
  for (auto& [id, arc] : arcs_) arc.content.RetargetXrefs(absorbed, a->first);
  return a->first;
}

void AnnotationGraph::AnchorNode(std::string_view node_id, Decimal offset) {
  auto it = nodes_.find(std::string(node_id));
  if (it == nodes_.end()) throw Error(ErrorCode::kUnknownNode, std::string(node_id));
  const Node& node = it->second;

  Adjacency adj(arcs_);
  auto ancestors = Reachable(adj, node.id, Direction::kBackward);
  auto descendants = Reachable(adj, node.id, Direction::kForward);
  ancestors.erase(node.id);
  descendants.erase(node.id);
  auto latest = OffsetBounds(nodes_, ancestors, /*want_max=*/true);
  auto earliest = OffsetBounds(nodes_, descendants, /*want_max=*/false);
  if (auto hi = latest.find(node.timeline);
      hi != latest.end() && hi->second.offset > offset) {
    throw Error(ErrorCode::kTimeOrderViolation,
                offset.text() + " precedes ancestor " + hi->second.node +
                    " at " + hi->second.offset.text());
  }
  if (auto lo = earliest.find(node.timeline);
      lo != earliest.end() && offset > lo->second.offset) {
    throw Error(ErrorCode::kTimeOrderViolation,
                offset.text() + " follows descendant " + lo->second.node +
                    " at " + lo->second.offset.text());
  }
  it->second.offset = std::move(offset);
}

void AnnotationGraph::RemoveArc(std::string_view arc_id) {
  auto it = arcs_.find(std::string(arc_id));
  if (it == arcs_.end()) throw Error(ErrorCode::kUnknownArc, std::string(arc_id));
  std::string start = it->second.start;
  std::string end = it->second.end;
  arcs_.erase(it);
  for (const std::string& endpoint : {start, end}) {
    bool used = std::any_of(arcs_.begin(), arcs_.end(), [&](const auto& kv) {
      return kv.second.start == endpoint || kv.second.end == endpoint;
    });
    if (!used) nodes_.erase(endpoint);
  }
}

ValidationReport ResolveXrefs(const AnnotationGraph& graph) {
  ValidationReport report;
  for (const auto& [id, arc] : graph.arcs()) {
    std::vector<std::string> targets;
    arc.content.CollectXrefs(&targets);
    for (const std::string& target : targets) {
      if (!graph.arcs().count(target)) {
        report.push_back({ViolationKind::kDanglingReference, {target},
                          "referenced by arc " + id});
      }
    }
  }
  return report;
}

ValidationReport Validate(const AnnotationGraph& graph) {
  ValidationReport report;
  const auto& nodes = graph.nodes();
  const auto& arcs = graph.arcs();

  // Arcs whose endpoints are missing take no part in the structural checks.
  std::map<std::string, Arc> linked;
  for (const auto& [id, arc] : arcs) {
    for (const std::string* endpoint : {&arc.start, &arc.end}) {
      if (!nodes.count(*endpoint)) {
        report.push_back({ViolationKind::kDanglingReference, {*endpoint},
                          "endpoint of arc " + id});
      }
    }
    if (nodes.count(arc.start) && nodes.count(arc.end)) linked.emplace(id, arc);
  }
  for (const auto& [id, node] : nodes) {
    if (!graph.timelines().count(node.timeline)) {
      report.push_back({ViolationKind::kDanglingReference, {node.timeline},
                        "timeline of node " + id});
    }
  }

  Adjacency adj(linked);
  for (const auto& [id, node] : nodes) {
    if (adj.Out(id).empty() && adj.In(id).empty()) {
      report.push_back({ViolationKind::kOrphanNode, {id}, "node has no arcs"});
    }
  }

  // Kahn's algorithm; whatever cannot be ordered sits on or behind a cycle.
  std::map<std::string, size_t> in_degree;
  for (const auto& [id, node] : nodes) in_degree[id] = adj.In(id).size();
  std::deque<std::string> ready;
  for (const auto& [id, degree] : in_degree) {
    if (degree == 0) ready.push_back(id);
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string id = std::move(ready.front());
    ready.pop_front();
    order.push_back(id);
    for (const Arc* arc : adj.Out(id)) {
      if (--in_degree[arc->end] == 0) ready.push_back(arc->end);
    }
  }
  if (order.size() < nodes.size()) {
    // Peel off nodes that only lead into the cyclic core.
    std::set<std::string> core;
    for (const auto& [id, degree] : in_degree) {
      if (degree > 0) core.insert(id);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = core.begin(); it != core.end();) {
        bool has_out = std::any_of(
            adj.Out(*it).begin(), adj.Out(*it).end(),
            [&](const Arc* arc) { return core.count(arc->end) > 0; });
        if (!has_out) {
          it = core.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
    report.push_back({ViolationKind::kCycle,
                      std::vector<std::string>(core.begin(), core.end()),
                      "directed cycle"});
  }

  // Latest anchored ancestor per timeline, propagated in topological order.
  std::unordered_map<std::string, std::map<std::string, Bound>> latest;
  for (const std::string& id : order) {
    const Node& node = nodes.at(id);
    auto& mine = latest[id];
    if (node.offset) {
      auto hi = mine.find(node.timeline);
      if (hi != mine.end() && hi->second.offset > *node.offset) {
        report.push_back({ViolationKind::kTimeOrderViolation,
                          {id, hi->second.node},
                          "offset " + node.offset->text() +
                              " is reachable from later offset " +
                              hi->second.offset.text()});
      }
    }
    std::map<std::string, Bound> outgoing = mine;
    if (node.offset) {
      auto [slot, inserted] =
          outgoing.try_emplace(node.timeline, Bound{*node.offset, id});
      if (!inserted && *node.offset > slot->second.offset) {
        slot->second = Bound{*node.offset, id};
      }
    }
    for (const Arc* arc : adj.Out(id)) {
      auto& theirs = latest[arc->end];
      for (const auto& [timeline, bound] : outgoing) {
        auto [slot, inserted] = theirs.try_emplace(timeline, bound);
        if (!inserted && bound.offset > slot->second.offset) slot->second = bound;
      }
    }
  }

  ValidationReport xrefs = ResolveXrefs(graph);
  report.insert(report.end(), xrefs.begin(), xrefs.end());
  return report;
}

}  // namespace annograph
