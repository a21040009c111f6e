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

#include "annograph/decimal.h"

#include <algorithm>
#include <cctype>

namespace annograph {
namespace {

bool AllDigits(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::strong_ordering CompareMagnitude(const std::string& int_a,
                                      const std::string& frac_a,
                                      const std::string& int_b,
                                      const std::string& frac_b) {
  if (int_a.size() != int_b.size()) return int_a.size() <=> int_b.size();
  if (int c = int_a.compare(int_b); c != 0) return c <=> 0;
  // Fractions have no trailing zeros, so a plain lexicographic comparison
  // orders them numerically.
  if (int c = frac_a.compare(frac_b); c != 0) return c <=> 0;
  return std::strong_ordering::equal;
}

}  // namespace

Decimal::Decimal() : text_("0") {}

std::optional<Decimal> Decimal::Parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view int_part = rest;
  std::string_view frac_part;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!AllDigits(int_part) || !AllDigits(frac_part)) return std::nullopt;

  Decimal d;
  d.text_ = std::string(text);
  size_t first = int_part.find_first_not_of('0');
  d.integer_ = first == std::string_view::npos ? std::string()
                                               : std::string(int_part.substr(first));
  size_t last = frac_part.find_last_not_of('0');
  d.fraction_ = last == std::string_view::npos
                    ? std::string()
                    : std::string(frac_part.substr(0, last + 1));
  d.negative_ = negative && !(d.integer_.empty() && d.fraction_.empty());
  return d;
}

Decimal Decimal::FromInt(int64_t value) {
  return *Parse(std::to_string(value));
}

std::string Decimal::Canonical() const {
  std::string out;
  if (negative_) out += '-';
  out += integer_.empty() ? "0" : integer_;
  if (!fraction_.empty()) {
    out += '.';
    out += fraction_;
  }
  return out;
}

std::strong_ordering Decimal::operator<=>(const Decimal& other) const {
  if (negative_ != other.negative_) {
    return negative_ ? std::strong_ordering::less
                     : std::strong_ordering::greater;
  }
  auto magnitude =
      CompareMagnitude(integer_, fraction_, other.integer_, other.fraction_);
  if (negative_) return 0 <=> magnitude;
  return magnitude;
}

}  // namespace annograph
