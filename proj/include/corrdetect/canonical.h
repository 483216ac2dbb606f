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

#ifndef CORRDETECT_CANONICAL_H_
#define CORRDETECT_CANONICAL_H_

#include <cstdint>
#include <string>
#include <vector>

namespace corrdetect {

// Largest vertex count accepted by the canonical labeling routines.
inline constexpr int kMaxCanonicalVertices = 14;

// Small undirected multigraph as a symmetric multiplicity matrix; entry
// (u, u) is the loop multiplicity at u.
class SmallMultigraph {
 public:
  explicit SmallMultigraph(int v) : v_(v), mult_(static_cast<size_t>(v) * v, 0) {}

  int num_vertices() const { return v_; }
  int at(int u, int w) const { return mult_[static_cast<size_t>(u) * v_ + w]; }
  // Adds `count` parallel edges (a loop when u == w).
  void Add(int u, int w, int count = 1);

 private:
  int v_;
  std::vector<uint8_t> mult_;
};

struct CanonicalLabeling {
  // Equal for two multigraphs iff they are isomorphic.
  std::string key;
  // position[u] is the index of vertex u in the canonical ordering.
  std::vector<int> position;
};

// Color refinement with individualization; the key is the lexicographically
// least adjacency string over the search leaves. Throws CapacityError above
// kMaxCanonicalVertices.
CanonicalLabeling Canonicalize(const SmallMultigraph& g);

// Number of vertex permutations preserving all multiplicities. Throws
// CapacityError above kMaxCanonicalVertices.
uint64_t CountAutomorphisms(const SmallMultigraph& g);

// Lowercase hex rendering of a canonical key, for text output.
std::string KeyToHex(const std::string& key);

}  // namespace corrdetect

#endif  // CORRDETECT_CANONICAL_H_
