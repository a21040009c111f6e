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

#ifndef ANNOGRAPH_SRC_XML_TREE_H_
#define ANNOGRAPH_SRC_XML_TREE_H_

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace annograph::xml {

// Minimal element tree for the interchange readers. Comments and
// processing instructions are dropped; character data directly inside an
// element is concatenated into `text`.
struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::string text;
  int line = 0;

  const std::string* Attribute(std::string_view key) const;
};

// Throws Error(kMalformedXml) with the failing line.
std::unique_ptr<Element> Parse(std::string_view document);

std::string EscapeText(std::string_view text);
std::string EscapeAttribute(std::string_view text);

// Text with leading and trailing XML whitespace removed.
std::string_view Trim(std::string_view text);

}  // namespace annograph::xml

#endif  // ANNOGRAPH_SRC_XML_TREE_H_
