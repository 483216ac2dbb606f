// Copyright 2026 The corrdetect Authors.
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

#ifndef CORRDETECT_EDGE_LIST_H_
#define CORRDETECT_EDGE_LIST_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "corrdetect/graph.h"

namespace corrdetect {

struct LabeledGraph {
  SimpleGraph graph;
  // labels[v] is the input id of vertex v. Empty when the input ids were
  // non-negative integers used as vertex numbers directly.
  std::vector<std::string> labels;
};

// Reads "u v" or "u v w" lines. Blank lines and '#' comments are skipped; a
// "# vertices N" comment fixes the vertex count for integer ids. A weighted
// line is kept iff w >= m0; an unweighted line counts as w = 1. Duplicate
// edges collapse and self-loops are dropped. Throws ParseError with the line
// number on malformed input and ParameterError for m0 < 1.
LabeledGraph ReadEdgeList(std::istream& in, double m0 = 1.0);
LabeledGraph ReadEdgeListFile(const std::string& path, double m0 = 1.0);

// Writes a "# vertices N" header followed by one "u v" line per edge (u < v).
void WriteEdgeList(std::ostream& out, const SimpleGraph& g);

}  // namespace corrdetect

#endif  // CORRDETECT_EDGE_LIST_H_
