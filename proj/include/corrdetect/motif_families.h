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

#ifndef CORRDETECT_MOTIF_FAMILIES_H_
#define CORRDETECT_MOTIF_FAMILIES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corrdetect/motif.h"

namespace corrdetect {

enum class FamilyKind { kTrees, kBoundedDegree, kStructuredBd, kSimpleNoIsolated, kCustom };

std::string FamilyKindName(FamilyKind kind);

// MotifFamily members are pairwise non-isomorphic, stored in canonical
// labeling and sorted by (vertices, edges, key).
struct MotifFamily {
  FamilyKind kind = FamilyKind::kCustom;
  std::vector<Motif> members;

  size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
};

// Canonicalizes, deduplicates and sorts arbitrary motifs.
MotifFamily MakeFamily(FamilyKind kind, const std::vector<Motif>& motifs);

struct EnumerationOptions {
  // When set, candidates are generated in a shuffled order and each is
  // randomly relabeled before canonicalization. The result must not change.
  std::optional<uint64_t> shuffle_seed;
};

// Trees with ne edges (ne + 1 vertices); ne = 0 gives the single vertex.
// CapacityError for ne > 9.
MotifFamily EnumerateFreeTrees(int ne, const EnumerationOptions& opts = {});

// Connected simple graphs with exactly ne edges and maximum degree <= d.
// CapacityError for ne > 9.
MotifFamily EnumerateBoundedDegree(int ne, int d, const EnumerationOptions& opts = {});

// Two central vertices joined by d - 1 paths with ell internal vertices each,
// a pendant vertex on each central vertex, and a perfect matching between
// the internal vertices of every pair of paths. All matchings are generated
// and deduplicated. Vertex count ell (d - 1) + 4, edge count
// C(d, 2) ell + d + 1. CapacityError when the vertex count exceeds 14.
MotifFamily EnumerateStructuredBd(int ell, int d);

// Lower bound on the structured family size for the edge count of (ell, d).
double StructuredBdSizeLowerBound(int ell, int d);

// Simple graphs without isolated vertices and at most max_edges edges,
// including the empty graph. CapacityError for max_edges > 5.
MotifFamily EnumerateSimpleNoIsolated(int max_edges, const EnumerationOptions& opts = {});

}  // namespace corrdetect

#endif  // CORRDETECT_MOTIF_FAMILIES_H_
