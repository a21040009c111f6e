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

#include "content_xml.h"

#include <algorithm>

#include "annograph/errors.h"

namespace annograph::xml {
namespace {

void Report(const ReadContext& context, const Element& where,
            const std::string& what) {
  if (context.options().strict) {
    throw Error(ErrorCode::kUnknownElement, what, where.line);
  }
  if (context.options().warnings != nullptr) {
    context.options().warnings->push_back("line " + std::to_string(where.line) +
                                          ": skipped " + what);
  }
}

bool IsBlank(std::string_view text) { return Trim(text).empty(); }

}  // namespace

void ReadContext::UnknownElement(const Element& element) const {
  Report(*this, element, "unknown element <" + element.name + ">");
}

void ReadContext::CheckAttributes(
    const Element& element, std::initializer_list<std::string_view> known) const {
  for (const auto& [key, value] : element.attributes) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      Report(*this, element,
             "unknown attribute " + key + " on <" + element.name + ">");
    }
  }
}

const std::string& ReadContext::Required(const Element& element,
                                         std::string_view attribute) const {
  const std::string* value = element.Attribute(attribute);
  if (value == nullptr) {
    throw Error(ErrorCode::kInvalidDocument,
                "<" + element.name + "> lacks attribute " + std::string(attribute),
                element.line);
  }
  return *value;
}

Content ReadContent(const Element& element, const ReadContext& context) {
  context.CheckAttributes(element, {});
  FeatureSet features;
  const Element* xref = nullptr;
  bool has_fields = false;
  for (const auto& child : element.children) {
    if (child->name == "Field") {
      has_fields = true;
      context.CheckAttributes(*child, {});
      std::string feature;
      bool has_feature = false;
      Content value{FeatureSet{}};
      for (const auto& part : child->children) {
        if (part->name == "Feature") {
          context.CheckAttributes(*part, {});
          for (const auto& inner : part->children) context.UnknownElement(*inner);
          feature = std::string(Trim(part->text));
          has_feature = true;
        } else if (part->name == "Value") {
          value = ReadContent(*part, context);
        } else {
          context.UnknownElement(*part);
        }
      }
      if (!has_feature) {
        throw Error(ErrorCode::kInvalidDocument, "<Field> without <Feature>",
                    child->line);
      }
      features.push_back(Field{std::move(feature), std::move(value)});
    } else if (child->name == "AG_xref") {
      if (xref != nullptr) {
        throw Error(ErrorCode::kInvalidDocument,
                    "<" + element.name + "> holds more than one <AG_xref>",
                    child->line);
      }
      context.CheckAttributes(*child, {"AG_Arc"});
      xref = child.get();
    } else {
      context.UnknownElement(*child);
    }
  }
  if (xref != nullptr && has_fields) {
    throw Error(ErrorCode::kInvalidDocument,
                "<" + element.name + "> mixes <Field> and <AG_xref>",
                element.line);
  }
  if ((xref != nullptr || has_fields) && !IsBlank(element.text)) {
    throw Error(ErrorCode::kInvalidDocument,
                "<" + element.name + "> mixes text and elements", element.line);
  }
  if (xref != nullptr) return Content(Xref{context.Required(*xref, "AG_Arc")});
  if (has_fields) return Content(std::move(features));
  std::string_view text = Trim(element.text);
  if (text.empty()) return Content(FeatureSet{});
  return Content(std::string(text));
}

void WriteContent(std::string_view tag, const Content& content, int indent,
                  std::string* out) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  *out += pad;
  *out += '<';
  *out += tag;
  if (content.is_xref()) {
    *out += "><AG_xref AG_Arc=\"" + EscapeAttribute(content.xref().target) +
            "\"/></";
    *out += tag;
    *out += ">\n";
    return;
  }
  if (content.is_literal() && !content.literal().empty()) {
    *out += '>';
    *out += EscapeText(content.literal());
    *out += "</";
    *out += tag;
    *out += ">\n";
    return;
  }
  if (content.is_literal() || content.features().empty()) {
    *out += "/>\n";
    return;
  }
  *out += ">\n";
  for (const Field& field : content.features()) {
    *out += pad + "  <Field>\n";
    *out += pad + "    <Feature>" + EscapeText(field.feature) + "</Feature>\n";
    WriteContent("Value", field.value, indent + 4, out);
    *out += pad + "  </Field>\n";
  }
  *out += pad;
  *out += "</";
  *out += tag;
  *out += ">\n";
}

}  // namespace annograph::xml
