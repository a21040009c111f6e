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

#ifndef ANNOGRAPH_LEXICON_H_
#define ANNOGRAPH_LEXICON_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annograph/content.h"
#include "annograph/graph.h"
#include "annograph/read_options.h"

namespace annograph {

// One meaning of a lexical item. Repeated and nested features are kept in
// document order.
struct LexiconEntry {
  std::string id;
  std::string lexeme;
  Content content;

  bool operator==(const LexiconEntry&) const = default;
};

// An AtlasSignal lexicon document: at most one Signal holding the entries.
struct Lexicon {
  std::optional<SignalDescriptor> signal;
  std::vector<LexiconEntry> entries;

  bool operator==(const Lexicon&) const = default;
};

// Throws kMalformedXml, kInvalidDocument, kUnknownElement (strict),
// kDuplicateId.
Lexicon ParseLexicon(std::string_view document, const ReadOptions& options = {});

// Throws kInvalidArgument when there are entries but no signal.
std::string SerializeLexicon(const Lexicon& lexicon);

}  // namespace annograph

#endif  // ANNOGRAPH_LEXICON_H_
