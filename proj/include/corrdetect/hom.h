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

#ifndef CORRDETECT_HOM_H_
#define CORRDETECT_HOM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "corrdetect/canonical.h"
#include "corrdetect/graph.h"
#include "corrdetect/motif.h"
#include "corrdetect/motif_families.h"

namespace corrdetect {

// Pattern multigraph used for quotients of motifs.
class MultiMotif {
 public:
  explicit MultiMotif(int v = 0) : v_(v), loops_(v, 0) {}
  static MultiMotif FromMotif(const Motif& m);

  int num_vertices() const { return v_; }
  // Adds parallel edges with multiplicity `count`; u == w adds loops.
  void AddEdge(int u, int w, int count = 1);
  // Pairs (u, w) with u < w mapped to their multiplicity.
  const std::map<Edge, int>& edges() const { return edges_; }
  int loops(int u) const { return loops_[u]; }
  bool has_loops() const;
  int total_edges() const;
  SmallMultigraph ToSmallMultigraph() const;
  bool operator==(const MultiMotif&) const = default;

 private:
  int v_;
  std::map<Edge, int> edges_;
  std::vector<int> loops_;
};

// Merges the vertices of each block; block_of[u] in 0..k-1 names u's block.
// Edges inside a block become loops.
MultiMotif Quotient(const MultiMotif& m, std::span<const int> block_of);

struct PartitionTerm {
  // Restricted growth string: block_of[0] = 0 and each entry is at most one
  // more than the maximum before it.
  std::vector<int> block_of;
  int num_blocks;
  // Product over blocks of (-1)^(|B|-1) (|B|-1)!.
  int64_t mobius;
};

// All set partitions of {0..v-1}. CapacityError for v > 8.
std::vector<PartitionTerm> PartitionTerms(int v);

// Dense powers W^m (entrywise) of the centered weight matrix of one graph,
// materialized on first use. Not thread-safe; one instance per evaluation.
class WeightPowers {
 public:
  explicit WeightPowers(const CenteredGraph& g) : g_(g) {}
  int size() const { return g_.num_vertices(); }
  const Eigen::MatrixXd& Power(int m);

 private:
  const CenteredGraph& g_;
  std::map<int, Eigen::MatrixXd> cache_;
};

// Sum over all maps V(H) -> V(G) of the product of weight^multiplicity.
// Evaluated by variable elimination; `order` overrides the greedy
// min-degree elimination order and must list every vertex once.
double HomWeighted(const MultiMotif& h, const CenteredGraph& g,
                   std::optional<std::span<const int>> order = std::nullopt);
double HomWeighted(const MultiMotif& h, WeightPowers& weights,
                   std::optional<std::span<const int>> order = std::nullopt);

// Sum over injective maps, by Mobius inversion over set partitions of V(M).
// Returns 0 when v(M) exceeds v(G). CapacityError for v(M) > 8.
double InjWeighted(const Motif& m, const CenteredGraph& g);

// Literal sums over maps. CapacityError when v(G)^v(M) > 1e8.
double InjBruteforce(const MultiMotif& m, const CenteredGraph& g);
double InjBruteforce(const Motif& m, const CenteredGraph& g);
double HomBruteforce(const MultiMotif& m, const CenteredGraph& g);

// Injective counts for a whole family. Quotients are grouped by isomorphism
// class across members, so each distinct class is evaluated once per graph.
class InjectivePlan {
 public:
  explicit InjectivePlan(const std::vector<Motif>& motifs);
  explicit InjectivePlan(const MotifFamily& family) : InjectivePlan(family.members) {}

  // inj(M, g) for every motif, in input order.
  std::vector<double> Evaluate(const CenteredGraph& g) const;
  size_t num_quotient_classes() const { return classes_.size(); }

 private:
  struct Term {
    size_t class_index;
    double coefficient;
  };
  std::vector<int> motif_vertices_;
  std::vector<MultiMotif> classes_;
  std::vector<std::vector<Term>> terms_;
};

}  // namespace corrdetect

#endif  // CORRDETECT_HOM_H_
