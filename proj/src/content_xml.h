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

#ifndef ANNOGRAPH_SRC_CONTENT_XML_H_
#define ANNOGRAPH_SRC_CONTENT_XML_H_

#include <initializer_list>
#include <string>
#include <string_view>

#include "annograph/content.h"
#include "annograph/read_options.h"
#include "xml_tree.h"

namespace annograph::xml {

// Strict-mode aware handling of vocabulary the readers do not know.
class ReadContext {
 public:
  explicit ReadContext(const ReadOptions& options) : options_(options) {}

  // Warns about (or, when strict, rejects) `element` as a whole.
  void UnknownElement(const Element& element) const;

  // Same for every attribute of `element` not in `known`.
  void CheckAttributes(const Element& element,
                       std::initializer_list<std::string_view> known) const;

  // Throws kInvalidDocument when the attribute is absent.
  const std::string& Required(const Element& element,
                              std::string_view attribute) const;

  const ReadOptions& options() const { return options_; }

 private:
  const ReadOptions& options_;
};

// Reads a Content or Value element: Field children make a feature set, a
// single AG_xref child makes an xref, bare text makes a literal, and an
// element with neither is an empty feature set.
Content ReadContent(const Element& element, const ReadContext& context);

// Appends `<tag>...</tag>` for `content`, starting at `indent` spaces and
// ending with a newline.
void WriteContent(std::string_view tag, const Content& content, int indent,
                  std::string* out);

}  // namespace annograph::xml

#endif  // ANNOGRAPH_SRC_CONTENT_XML_H_
