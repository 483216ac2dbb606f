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

#ifndef CORRDETECT_MOTIF_H_
#define CORRDETECT_MOTIF_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "corrdetect/canonical.h"
#include "corrdetect/graph.h"

namespace corrdetect {

// Small simple pattern graph. Canonical key and automorphism count are
// computed at construction when v <= kMaxCanonicalVertices; larger motifs can
// still be counted but their key accessors throw CapacityError.
class Motif {
 public:
  Motif() : Motif(0, std::span<const Edge>()) {}
  // Throws ParameterError on loops, repeated edges or bad endpoints.
  Motif(int v, std::span<const Edge> edges);
  Motif(int v, std::initializer_list<Edge> edges)
      : Motif(v, std::span<const Edge>(edges.begin(), edges.size())) {}
  static Motif FromGraph(const SimpleGraph& g);

  int num_vertices() const { return v_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  // Sorted, each as (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int w) const;
  int degree(int u) const;
  int max_degree() const;
  bool is_connected() const;

  const std::string& canonical_key() const;
  uint64_t automorphism_count() const;
  // Copy relabeled into canonical order; isomorphic motifs map to equal
  // edge lists.
  Motif Canonical() const;
  Motif Relabeled(std::span<const int> perm) const;

  SmallMultigraph ToMultigraph() const;
  SimpleGraph ToGraph() const { return SimpleGraph(v_, edges_); }
  std::string ToString() const;

 private:
  int v_;
  std::vector<Edge> edges_;
  std::string key_;
  std::vector<int> position_;
  uint64_t aut_ = 0;
};

bool IsIsomorphic(const Motif& a, const Motif& b);

}  // namespace corrdetect

#endif  // CORRDETECT_MOTIF_H_
