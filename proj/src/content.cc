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

#include "annograph/content.h"

#include <algorithm>

namespace annograph {

const Content* Content::Find(std::string_view feature) const {
  if (!is_feature_set()) return nullptr;
  for (const Field& field : features()) {
    if (field.feature == feature) return &field.value;
  }
  return nullptr;
}

void Content::CollectXrefs(std::vector<std::string>* targets) const {
  if (is_xref()) {
    targets->push_back(xref().target);
  } else if (is_feature_set()) {
    for (const Field& field : features()) field.value.CollectXrefs(targets);
  }
}

void Content::RetargetXrefs(std::string_view from, std::string_view to) {
  if (Xref* xref = std::get_if<Xref>(&value_)) {
    if (xref->target == from) xref->target = std::string(to);
  } else if (FeatureSet* fs = std::get_if<FeatureSet>(&value_)) {
    for (Field& field : *fs) field.value.RetargetXrefs(from, to);
  }
}

void Content::SetFeature(std::string_view feature, Content value) {
  if (!is_feature_set()) {
    FeatureSet wrapped;
    wrapped.push_back(Field{std::string(kWrappedContentFeature), *this});
    value_ = std::move(wrapped);
  }
  FeatureSet& fs = mutable_features();
  auto it = std::find_if(fs.begin(), fs.end(),
                         [&](const Field& f) { return f.feature == feature; });
  if (it == fs.end()) {
    fs.push_back(Field{std::string(feature), std::move(value)});
    return;
  }
  it->value = std::move(value);
  fs.erase(std::remove_if(std::next(it), fs.end(),
                          [&](const Field& f) { return f.feature == feature; }),
           fs.end());
}

std::string Content::Summary() const {
  if (is_literal()) return literal();
  if (is_xref()) return "->" + xref().target;
  std::string out = "{";
  bool first = true;
  for (const Field& field : features()) {
    if (!first) out += ',';
    first = false;
    out += field.feature;
    out += '=';
    out += field.value.Summary();
  }
  out += '}';
  return out;
}

bool Content::operator==(const Content& other) const {
  return value_ == other.value_;
}

}  // namespace annograph
