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

#ifndef ANNOGRAPH_READ_OPTIONS_H_
#define ANNOGRAPH_READ_OPTIONS_H_

#include <string>
#include <vector>

namespace annograph {

// Options shared by the XML document readers.
struct ReadOptions {
  // Unknown elements and attributes are errors (kUnknownElement) instead of
  // warnings.
  bool strict = false;
  // Fail with kDanglingXref when a cross-reference does not resolve. When
  // off, the document loads and Validate() reports the dangling target.
  bool check_xrefs = true;
  // Receives one message per skipped element or attribute; may be null.
  std::vector<std::string>* warnings = nullptr;
};

}  // namespace annograph

#endif  // ANNOGRAPH_READ_OPTIONS_H_
