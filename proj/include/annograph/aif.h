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

#ifndef ANNOGRAPH_AIF_H_
#define ANNOGRAPH_AIF_H_

#include <string>
#include <string_view>

#include "annograph/graph.h"
#include "annograph/read_options.h"

namespace annograph {

// Reads an AnnotationGraph document (AG_Signal, AG_Node, AG_Arc elements).
//
// Each distinct Signal attribute on AG_Node becomes a one-dimensional
// timeline with that id, whose unit is the nodes' `units` attribute.
// Signal locations are stored, never opened. The graph is returned as
// written; run Validate() to check it.
//
// Throws Error with kMalformedXml, kInvalidDocument, kUnknownElement
// (strict), kInvalidOffset, kUnitConflict, kDuplicateId, kDanglingNodeRef
// or kDanglingXref.
AnnotationGraph ParseAif(std::string_view document,
                         const ReadOptions& options = {});

// Canonical AIF text: XML declaration, then signals, nodes and arcs, each
// ordered by id, two-space indentation, offsets spelled as stored. Equal
// graphs give identical bytes. Throws kInvalidGraph (with the report) if
// Validate() finds problems, kInvalidArgument for multi-dimensional
// timelines.
std::string SerializeAif(const AnnotationGraph& graph);

}  // namespace annograph

#endif  // ANNOGRAPH_AIF_H_
