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

#ifndef ANNOGRAPH_CONTENT_H_
#define ANNOGRAPH_CONTENT_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace annograph {

struct Field;

// Ordered feature/value pairs. Feature names may repeat.
using FeatureSet = std::vector<Field>;

// Reference to another annotation (arc) by id.
struct Xref {
  std::string target;

  bool operator==(const Xref&) const = default;
};

// The label payload of an arc or annotation: a feature set, a literal
// string, or a cross-reference. Values inside a feature set are themselves
// Content, so structure nests.
class Content {
 public:
  Content() = default;
  Content(FeatureSet features) : value_(std::move(features)) {}
  Content(std::string literal) : value_(std::move(literal)) {}
  Content(const char* literal) : value_(std::string(literal)) {}
  Content(Xref xref) : value_(std::move(xref)) {}

  bool is_feature_set() const {
    return std::holds_alternative<FeatureSet>(value_);
  }
  bool is_literal() const { return std::holds_alternative<std::string>(value_); }
  bool is_xref() const { return std::holds_alternative<Xref>(value_); }

  const FeatureSet& features() const { return std::get<FeatureSet>(value_); }
  FeatureSet& mutable_features() { return std::get<FeatureSet>(value_); }
  const std::string& literal() const { return std::get<std::string>(value_); }
  const Xref& xref() const { return std::get<Xref>(value_); }

  // First value stored under `feature` at the top level, or nullptr.
  const Content* Find(std::string_view feature) const;

  // Every xref target in this tree, depth first.
  void CollectXrefs(std::vector<std::string>* targets) const;

  // Points every xref naming `from` at `to` instead.
  void RetargetXrefs(std::string_view from, std::string_view to);

  // Replaces the first pair named `feature` and drops later pairs with the
  // same name; appends when absent. Literal and xref contents are first
  // wrapped as {kWrappedContentFeature: old} so the result is a feature set.
  void SetFeature(std::string_view feature, Content value);

  // Compact one-line rendering: literal as-is, xref as "->ID", feature
  // sets as "{f=v,g=w}".
  std::string Summary() const;

  bool operator==(const Content& other) const;

 private:
  std::variant<FeatureSet, std::string, Xref> value_;
};

struct Field {
  std::string feature;
  Content value;

  bool operator==(const Field&) const = default;
};

// Feature name under which SetFeature stores promoted non-feature content.
inline constexpr std::string_view kWrappedContentFeature = "_content";

}  // namespace annograph

#endif  // ANNOGRAPH_CONTENT_H_
