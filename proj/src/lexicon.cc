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

#include "annograph/lexicon.h"

#include <set>

#include "annograph/errors.h"
#include "content_xml.h"
#include "xml_tree.h"

namespace annograph {
namespace {

using xml::Element;

std::optional<std::string> Optional(const Element& element, std::string_view key) {
  if (const std::string* value = element.Attribute(key)) return *value;
  return std::nullopt;
}

void AppendAttribute(std::string* out, std::string_view key,
                     const std::optional<std::string>& value) {
  if (!value) return;
  *out += ' ';
  *out += key;
  *out += "=\"";
  *out += xml::EscapeAttribute(*value);
  *out += '"';
}

LexiconEntry ReadEntry(const Element& e, const xml::ReadContext& context) {
  context.CheckAttributes(e, {"ID"});
  LexiconEntry entry;
  entry.id = context.Required(e, "ID");
  entry.content = Content(FeatureSet{});
  bool has_content = false;
  for (const auto& child : e.children) {
    if (child->name == "Lexeme") {
      context.CheckAttributes(*child, {});
      for (const auto& inner : child->children) context.UnknownElement(*inner);
      entry.lexeme = std::string(xml::Trim(child->text));
    } else if (child->name == "Content") {
      if (has_content) {
        throw Error(ErrorCode::kInvalidDocument,
                    "entry " + entry.id + " has more than one <Content>",
                    child->line);
      }
      has_content = true;
      entry.content = xml::ReadContent(*child, context);
    } else {
      context.UnknownElement(*child);
    }
  }
  return entry;
}

}  // namespace

Lexicon ParseLexicon(std::string_view document, const ReadOptions& options) {
  std::unique_ptr<Element> root = xml::Parse(document);
  if (root->name != "AtlasSignal") {
    throw Error(ErrorCode::kInvalidDocument,
                "root element is <" + root->name + ">, expected <AtlasSignal>",
                root->line);
  }
  xml::ReadContext context(options);
  context.CheckAttributes(*root, {});

  Lexicon lexicon;
  std::set<std::string> ids;
  for (const auto& child : root->children) {
    if (child->name != "Signal") {
      context.UnknownElement(*child);
      continue;
    }
    if (lexicon.signal) {
      throw Error(ErrorCode::kInvalidDocument,
                  "more than one <Signal> in a lexicon", child->line);
    }
    const Element& s = *child;
    context.CheckAttributes(s, {"SignalID", "Class", "Format", "Encoding", "Comment"});
    SignalDescriptor signal;
    signal.id = Optional(s, "SignalID").value_or(std::string());
    signal.signal_class = Optional(s, "Class");
    signal.format = Optional(s, "Format");
    signal.encoding = Optional(s, "Encoding");
    signal.comment = Optional(s, "Comment");
    lexicon.signal = std::move(signal);
    for (const auto& e : s.children) {
      if (e->name != "Entry") {
        context.UnknownElement(*e);
        continue;
      }
      LexiconEntry entry = ReadEntry(*e, context);
      if (!ids.insert(entry.id).second) {
        throw Error(ErrorCode::kDuplicateId, "entry " + entry.id, e->line);
      }
      lexicon.entries.push_back(std::move(entry));
    }
  }
  return lexicon;
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!lexicon.signal) {
    if (!lexicon.entries.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "lexicon entries need a signal");
    }
    out += "<AtlasSignal/>\n";
    return out;
  }
  const SignalDescriptor& signal = *lexicon.signal;
  out += "<AtlasSignal>\n  <Signal";
  AppendAttribute(&out, "SignalID", signal.id);
  AppendAttribute(&out, "Class", signal.signal_class);
  AppendAttribute(&out, "Format", signal.format);
  AppendAttribute(&out, "Encoding", signal.encoding);
  AppendAttribute(&out, "Comment", signal.comment);
  if (lexicon.entries.empty()) {
    out += "/>\n</AtlasSignal>\n";
    return out;
  }
  out += ">\n";
  for (const LexiconEntry& entry : lexicon.entries) {
    out += "    <Entry";
    AppendAttribute(&out, "ID", entry.id);
    out += ">\n";
    if (entry.lexeme.empty()) {
      out += "      <Lexeme/>\n";
    } else {
      out += "      <Lexeme>" + xml::EscapeText(entry.lexeme) + "</Lexeme>\n";
    }
    xml::WriteContent("Content", entry.content, 6, &out);
    out += "    </Entry>\n";
  }
  out += "  </Signal>\n</AtlasSignal>\n";
  return out;
}

}  // namespace annograph
