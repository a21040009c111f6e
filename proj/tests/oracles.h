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

#ifndef ANNOGRAPH_TESTS_ORACLES_H_
#define ANNOGRAPH_TESTS_ORACLES_H_

// Brute-force reference checks. Nothing here calls the library's own
// validation or traversal code.

#include <string>
#include <vector>

#include "annograph/annotation_set.h"
#include "annograph/decimal.h"
#include "annograph/graph.h"

namespace annograph::testing {

std::string TestdataPath(const std::string& name);
std::string ReadFile(const std::string& path);

struct GraphVerdict {
  bool has_cycle = false;
  bool has_orphan = false;
  bool has_time_violation = false;
  bool has_dangling = false;

  bool ok() const {
    return !has_cycle && !has_orphan && !has_time_violation && !has_dangling;
  }
};

// Recursive DFS colouring for cycles, degree counting for orphans, a
// Floyd-Warshall transitive closure with a pairwise offset scan for time
// order, and a scan of every xref and endpoint for dangling references.
GraphVerdict BruteForceCheck(const AnnotationGraph& graph);

// Whether giving `node` the offset `offset` keeps every anchored
// ancestor/descendant pair on its timeline ordered, by transitive closure.
bool BruteForceAnchorAccepts(const AnnotationGraph& graph,
                             const std::string& node, const Decimal& offset);

// True when `to` is reachable from `from` (DFS, no memo).
bool BruteForceReachable(const AnnotationGraph& graph, const std::string& from,
                         const std::string& to);

// Linear scans over a set.
std::vector<std::string> ScanIncoming(const AnnotationSet& set,
                                      const std::string& anchor);
std::vector<std::string> ScanOutgoing(const AnnotationSet& set,
                                      const std::string& anchor);
std::vector<std::string> ScanAnchorsAtOffset(const AnnotationSet& set,
                                             const std::vector<Decimal>& offsets);
std::vector<std::string> ScanByType(const AnnotationSet& set,
                                    const std::string& type);
std::vector<std::string> ScanByFeature(const AnnotationSet& set,
                                       const std::string& feature,
                                       const Content& value);
std::vector<std::string> ScanBySignalGroup(const AnnotationSet& set,
                                           const std::string& group);

// Set validity by direct enumeration of every rule ValidateSet covers.
bool BruteForceSetValid(const AnnotationSet& set);

// Renames ids in a graph; ids not in `names` are kept.
AnnotationGraph RenameIds(const AnnotationGraph& graph,
                          const std::map<std::string, std::string>& names);

// Graph equality ignoring timelines no node uses (AIF has no way to write
// an unused timeline).
bool StructurallyEqual(const AnnotationGraph& a, const AnnotationGraph& b);

}  // namespace annograph::testing

#endif  // ANNOGRAPH_TESTS_ORACLES_H_
