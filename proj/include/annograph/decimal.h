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

#ifndef ANNOGRAPH_DECIMAL_H_
#define ANNOGRAPH_DECIMAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace annograph {

// An exact decimal number that remembers the text it was read from.
//
// Comparison is numeric ("5200" == "5200.0", "-0" == "0"); text() returns
// the original spelling so that offsets can be written back unchanged.
// Accepted syntax: [+-]? (digits ["." digits*] | "." digits).
class Decimal {
 public:
  // Zero, spelled "0".
  Decimal();

  static std::optional<Decimal> Parse(std::string_view text);
  static Decimal FromInt(int64_t value);

  const std::string& text() const { return text_; }

  // Normalized spelling: no leading/trailing zeros, no "+", no "-0".
  std::string Canonical() const;

  std::strong_ordering operator<=>(const Decimal& other) const;
  bool operator==(const Decimal& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  std::string text_;
  bool negative_ = false;
  std::string integer_;   // no leading zeros; empty for |x| < 1
  std::string fraction_;  // no trailing zeros
};

}  // namespace annograph

#endif  // ANNOGRAPH_DECIMAL_H_
