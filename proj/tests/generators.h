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

#ifndef ANNOGRAPH_TESTS_GENERATORS_H_
#define ANNOGRAPH_TESTS_GENERATORS_H_

#include <random>
#include <string>

#include "annograph/annotation_set.h"
#include "annograph/graph.h"
#include "annograph/lexicon.h"
#include "annograph/timit.h"

namespace annograph::testing {

using Rng = std::mt19937_64;

struct GraphShape {
  int max_arcs = 20;
  int max_timelines = 2;
  // Probability that a node carries an offset.
  double anchored = 0.7;
  // Allow xref contents (always to existing arcs).
  bool xrefs = true;
  // Keep both ends of every arc on one timeline.
  bool linear = false;
  // Allow nested feature sets.
  int max_depth = 3;
};

// A random well-formed graph: arcs follow a hidden topological order,
// offsets on each timeline grow along it, every node has an arc, and xrefs
// resolve. Offsets are decimal strings such as "12", "7.250", "0.5".
AnnotationGraph RandomGraph(Rng& rng, const GraphShape& shape = {});

// Random content tree. Literals are non-empty and carry no surrounding
// whitespace; `arc_ids` supplies xref targets (none when empty).
Content RandomContent(Rng& rng, int depth, const std::vector<std::string>& arc_ids);

// Applies one random, possibly harmful, unchecked mutation: arc reversal,
// offset swap, offset overwrite, back edge, orphan node, dangling xref, or
// arc removal without cleanup. Returns a short description.
std::string MutateGraph(Rng& rng, AnnotationGraph& graph);

// A random set over 1-D and 2-D signal groups with interval, box and
// polygon regions. Offsets come from a small pool so they collide.
AnnotationSet RandomSet(Rng& rng, int max_annotations = 20);

Lexicon RandomLexicon(Rng& rng, int max_entries, int max_depth);

ColumnTier RandomTier(Rng& rng, const std::string& type, int max_rows);

}  // namespace annograph::testing

#endif  // ANNOGRAPH_TESTS_GENERATORS_H_
