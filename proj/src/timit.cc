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

#include "annograph/timit.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "annograph/errors.h"

namespace annograph {
namespace {

constexpr std::string_view kSpace = " \t\r\v\f";

std::string_view NextToken(std::string_view* rest) {
  size_t start = rest->find_first_not_of(kSpace);
  if (start == std::string_view::npos) {
    *rest = {};
    return {};
  }
  size_t end = rest->find_first_of(kSpace, start);
  std::string_view token = rest->substr(start, end - start);
  *rest = end == std::string_view::npos ? std::string_view() : rest->substr(end);
  return token;
}

std::optional<int64_t> ToInt(std::string_view token) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::string NodeId(int64_t offset) { return "n" + std::to_string(offset); }

}  // namespace

ColumnTier ParseTier(std::string_view text, std::string arc_type,
                     std::string source_name, std::string units) {
  ColumnTier tier;
  tier.source_name = std::move(source_name);
  tier.arc_type = std::move(arc_type);
  tier.units = std::move(units);
  int line_number = 0;
  while (!text.empty()) {
    size_t newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view()
                                             : text.substr(newline + 1);
    ++line_number;
    std::string_view rest = line;
    std::string_view first = NextToken(&rest);
    if (first.empty()) continue;
    std::string_view second = NextToken(&rest);
    size_t label_start = rest.find_first_not_of(kSpace);
    if (second.empty() || label_start == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected \"start end label\", got \"" + std::string(line) + "\"",
                  line_number);
    }
    std::string_view label = rest.substr(label_start);
    label = label.substr(0, label.find_last_not_of(kSpace) + 1);
    std::optional<int64_t> start = ToInt(first);
    std::optional<int64_t> end = ToInt(second);
    if (!start || !end) {
      throw Error(ErrorCode::kNonIntegerOffset,
                  "offsets \"" + std::string(first) + "\" \"" +
                      std::string(second) + "\"",
                  line_number);
    }
    if (*start >= *end) {
      throw Error(ErrorCode::kReversedInterval,
                  std::to_string(*start) + " >= " + std::to_string(*end),
                  line_number);
    }
    tier.rows.push_back(TierRow{*start, *end, std::string(label)});
  }
  return tier;
}

std::string SerializeTier(const ColumnTier& tier) {
  std::string out;
  for (const TierRow& row : tier.rows) {
    out += std::to_string(row.start);
    out += ' ';
    out += std::to_string(row.end);
    out += ' ';
    out += row.label;
    out += '\n';
  }
  return out;
}

AnnotationGraph BuildGraph(const std::vector<ColumnTier>& tiers,
                           std::string_view timeline_id) {
  std::string units(kDefaultTierUnits);
  if (!tiers.empty()) units = tiers.front().units;
  for (const ColumnTier& tier : tiers) {
    if (tier.units != units) {
      throw Error(ErrorCode::kUnitMismatch,
                  "tier " + tier.source_name + " uses " + tier.units +
                      ", expected " + units);
    }
  }

  AnnotationGraph graph;
  graph.AddTimeline(Timeline{std::string(timeline_id), {units}});
  std::set<int64_t> offsets;
  for (const ColumnTier& tier : tiers) {
    for (const TierRow& row : tier.rows) {
      if (row.start >= row.end) {
        throw Error(ErrorCode::kReversedInterval,
                    "tier " + tier.source_name + ": " + std::to_string(row.start) +
                        " >= " + std::to_string(row.end));
      }
      offsets.insert(row.start);
      offsets.insert(row.end);
    }
  }
  for (int64_t offset : offsets) {
    graph.AddNode(timeline_id, Decimal::FromInt(offset), NodeId(offset));
  }
  // Every arc points from a lower to a higher offset, so no check can fail.
  auto& arcs = graph.mutable_arcs();
  size_t counter = 0;
  for (const ColumnTier& tier : tiers) {
    for (const TierRow& row : tier.rows) {
      std::string id;
      do {
        id = "g" + std::to_string(++counter);
      } while (graph.nodes().count(id) || graph.timelines().count(id));
      arcs.emplace(id, Arc{id, NodeId(row.start), NodeId(row.end), tier.arc_type,
                           Content(row.label)});
    }
  }
  return graph;
}

std::vector<ColumnTier> ExtractTiers(const AnnotationGraph& graph) {
  std::map<std::string, ColumnTier> tiers;
  std::string units;
  if (!graph.timelines().empty()) {
    units = graph.timelines().begin()->second.unit_names.front();
  }
  auto offset_of = [&](const std::string& node_id) -> int64_t {
    const Node* node = graph.FindNode(node_id);
    if (node == nullptr || !node->offset) {
      throw Error(ErrorCode::kUnanchoredNode, node_id);
    }
    std::optional<int64_t> value = ToInt(node->offset->Canonical());
    if (!value) {
      throw Error(ErrorCode::kNonIntegerOffset,
                  node_id + " at " + node->offset->text());
    }
    return *value;
  };
  for (const auto& [id, arc] : graph.arcs()) {
    ColumnTier& tier = tiers[arc.type];
    tier.arc_type = arc.type;
    tier.units = units;
    tier.rows.push_back(TierRow{offset_of(arc.start), offset_of(arc.end),
                                arc.content.is_literal() ? arc.content.literal()
                                                         : arc.content.Summary()});
  }
  std::vector<ColumnTier> out;
  for (auto& [type, tier] : tiers) {
    std::sort(tier.rows.begin(), tier.rows.end(),
              [](const TierRow& a, const TierRow& b) {
                return std::tie(a.start, a.end, a.label) <
                       std::tie(b.start, b.end, b.label);
              });
    out.push_back(std::move(tier));
  }
  return out;
}

}  // namespace annograph
