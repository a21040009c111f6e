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

#include "annograph/aif.h"

#include <set>

#include "annograph/errors.h"
#include "content_xml.h"
#include "xml_tree.h"

namespace annograph {
namespace {

using xml::Element;
using xml::EscapeAttribute;

std::optional<std::string> Optional(const Element& element,
                                    std::string_view key) {
  if (const std::string* value = element.Attribute(key)) return *value;
  return std::nullopt;
}

void AppendAttribute(std::string* out, std::string_view key,
                     const std::optional<std::string>& value) {
  if (!value) return;
  *out += ' ';
  *out += key;
  *out += "=\"";
  *out += EscapeAttribute(*value);
  *out += '"';
}

}  // namespace

AnnotationGraph ParseAif(std::string_view document, const ReadOptions& options) {
  std::unique_ptr<Element> root = xml::Parse(document);
  if (root->name != "AnnotationGraph") {
    throw Error(ErrorCode::kInvalidDocument,
                "root element is <" + root->name + ">, expected <AnnotationGraph>",
                root->line);
  }
  xml::ReadContext context(options);
  context.CheckAttributes(*root, {});

  AnnotationGraph graph;
  std::set<std::string> ids;  // nodes and arcs
  std::map<std::string, std::optional<std::string>> timeline_units;
  std::vector<const Element*> arc_elements;

  auto claim = [&](const std::string& id, const Element& where) {
    if (!ids.insert(id).second || graph.signals().count(id)) {
      throw Error(ErrorCode::kDuplicateId, "id " + id, where.line);
    }
  };

  for (const auto& child : root->children) {
    const Element& e = *child;
    if (e.name == "AG_Signal") {
      context.CheckAttributes(e, {"SignalID", "Format", "ArcTypes", "Location"});
      SignalDescriptor signal;
      signal.id = context.Required(e, "SignalID");
      signal.format = Optional(e, "Format");
      signal.arc_types = Optional(e, "ArcTypes");
      signal.location = Optional(e, "Location");
      if (graph.signals().count(signal.id) || ids.count(signal.id)) {
        throw Error(ErrorCode::kDuplicateId, "signal " + signal.id, e.line);
      }
      for (const auto& inner : e.children) context.UnknownElement(*inner);
      graph.mutable_signals().emplace(signal.id, signal);
    } else if (e.name == "AG_Node") {
      context.CheckAttributes(e, {"NodeId", "Signal", "Offset", "units"});
      Node node;
      node.id = context.Required(e, "NodeId");
      node.timeline = context.Required(e, "Signal");
      if (const std::string* text = e.Attribute("Offset")) {
        node.offset = Decimal::Parse(*text);
        if (!node.offset) {
          throw Error(ErrorCode::kInvalidOffset,
                      "node " + node.id + " offset \"" + *text + "\"", e.line);
        }
      }
      claim(node.id, e);
      auto& units = timeline_units[node.timeline];
      if (const std::string* unit = e.Attribute("units")) {
        if (units && *units != *unit) {
          throw Error(ErrorCode::kUnitConflict,
                      "signal " + node.timeline + " used with units " + *units +
                          " and " + *unit,
                      e.line);
        }
        units = *unit;
      }
      for (const auto& inner : e.children) context.UnknownElement(*inner);
      graph.mutable_nodes().emplace(node.id, std::move(node));
    } else if (e.name == "AG_Arc") {
      context.CheckAttributes(e, {"ID", "StartNode", "EndNode", "Type"});
      claim(context.Required(e, "ID"), e);
      arc_elements.push_back(&e);
    } else {
      context.UnknownElement(e);
    }
  }

  for (const auto& [signal, units] : timeline_units) {
    if (ids.count(signal)) {
      throw Error(ErrorCode::kDuplicateId, "timeline " + signal);
    }
    graph.mutable_timelines().emplace(
        signal, Timeline{signal, {units.value_or(std::string())}});
  }

  for (const Element* e : arc_elements) {
    Arc arc;
    arc.id = *e->Attribute("ID");
    arc.start = context.Required(*e, "StartNode");
    arc.end = context.Required(*e, "EndNode");
    arc.type = Optional(*e, "Type").value_or(std::string());
    for (const std::string* endpoint : {&arc.start, &arc.end}) {
      if (!graph.nodes().count(*endpoint)) {
        throw Error(ErrorCode::kDanglingNodeRef,
                    "arc " + arc.id + " names missing node " + *endpoint,
                    e->line);
      }
    }
    bool has_content = false;
    arc.content = Content(FeatureSet{});
    for (const auto& inner : e->children) {
      if (inner->name != "Content") {
        context.UnknownElement(*inner);
        continue;
      }
      if (has_content) {
        throw Error(ErrorCode::kInvalidDocument,
                    "arc " + arc.id + " has more than one <Content>", inner->line);
      }
      has_content = true;
      arc.content = xml::ReadContent(*inner, context);
    }
    graph.mutable_arcs().emplace(arc.id, std::move(arc));
  }

  if (options.check_xrefs) {
    ValidationReport dangling = ResolveXrefs(graph);
    if (!dangling.empty()) {
      throw Error(ErrorCode::kDanglingXref,
                  dangling.front().ids.front() + " (" + dangling.front().detail + ")");
    }
  }
  return graph;
}

std::string SerializeAif(const AnnotationGraph& graph) {
  ValidationReport report = Validate(graph);
  if (!report.empty()) {
    std::string message = std::to_string(report.size()) +
                          " violation(s), first: " + FormatViolation(report.front());
    throw Error(ErrorCode::kInvalidGraph, message, std::move(report));
  }
  for (const auto& [id, timeline] : graph.timelines()) {
    if (timeline.dimensionality() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "timeline " + id + " is not one-dimensional");
    }
  }

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (graph.signals().empty() && graph.nodes().empty() && graph.arcs().empty()) {
    out += "<AnnotationGraph/>\n";
    return out;
  }
  out += "<AnnotationGraph>\n";
  for (const auto& [id, signal] : graph.signals()) {
    out += "  <AG_Signal";
    AppendAttribute(&out, "SignalID", signal.id);
    AppendAttribute(&out, "Format", signal.format);
    AppendAttribute(&out, "ArcTypes", signal.arc_types);
    AppendAttribute(&out, "Location", signal.location);
    out += "/>\n";
  }
  for (const auto& [id, node] : graph.nodes()) {
    out += "  <AG_Node";
    AppendAttribute(&out, "NodeId", node.id);
    AppendAttribute(&out, "Signal", node.timeline);
    if (node.offset) AppendAttribute(&out, "Offset", node.offset->text());
    const std::string& unit = graph.timelines().at(node.timeline).unit_names.front();
    if (!unit.empty()) AppendAttribute(&out, "units", unit);
    out += "/>\n";
  }
  for (const auto& [id, arc] : graph.arcs()) {
    out += "  <AG_Arc";
    AppendAttribute(&out, "ID", arc.id);
    AppendAttribute(&out, "StartNode", arc.start);
    AppendAttribute(&out, "EndNode", arc.end);
    AppendAttribute(&out, "Type", arc.type);
    out += ">\n";
    xml::WriteContent("Content", arc.content, 4, &out);
    out += "  </AG_Arc>\n";
  }
  out += "</AnnotationGraph>\n";
  return out;
}

}  // namespace annograph
