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

#ifndef CORRDETECT_GRAPH_H_
#define CORRDETECT_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace corrdetect {

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 0..n-1 stored as adjacency bitset rows.
// Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Edges may be given in any orientation and order; duplicates collapse.
  // Self-loops and out-of-range endpoints throw ParameterError.
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<Edge> edges)
      : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static SimpleGraph Complete(int n);
  static SimpleGraph Empty(int n) { return SimpleGraph(n, std::span<const Edge>()); }
  static SimpleGraph Path(int n);
  static SimpleGraph Cycle(int n);

  int num_vertices() const { return n_; }
  int64_t num_edges() const { return num_edges_; }

  bool has_edge(int u, int v) const {
    return u != v && ((rows_[Offset(u) + (v >> 6)] >> (v & 63)) & 1ULL);
  }
  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;
  // Edge density e / C(n, 2); 0 for n < 2.
  double density() const;

  // Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
  SimpleGraph Induced(std::span<const int> vertices) const;
  // Graph with vertex v renamed to perm[v].
  SimpleGraph Relabeled(std::span<const int> perm) const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  size_t Offset(int u) const { return static_cast<size_t>(u) * words_; }
  void Set(int u, int v);

  int n_ = 0;
  size_t words_ = 0;
  int64_t num_edges_ = 0;
  std::vector<uint64_t> rows_;
};

// Bijection of [n]; image[v] is the image of v.
class Permutation {
 public:
  Permutation() = default;
  // Throws ParameterError unless `image` is a permutation of 0..n-1.
  explicit Permutation(std::vector<int> image);
  static Permutation Identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  std::span<const int> image() const { return image_; }
  Permutation Inverse() const;
  // (this * other)(v) = this(other(v)).
  Permutation Compose(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// Partial injective map between vertex sets.
class Injection {
 public:
  Injection() = default;
  // Throws ParameterError if two domain vertices share an image or a domain
  // vertex repeats.
  explicit Injection(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Ordered choice of distinct vertices from a parent graph.
struct VertexSample {
  int parent_n = 0;
  std::vector<int> chosen;

  // Throws ParameterError on repeats or out-of-range ids.
  void Validate() const;
  int size() const { return static_cast<int>(chosen.size()); }
};

// Model parameters (n, s, p, rho) with the derived signal quantities.
struct ModelParams {
  int n = 0;
  int s = 0;
  double p = 0.0;
  double rho = 0.0;

  // Throws ParameterError for s > n, p outside (0,1) or rho outside [0,1].
  // Returns non-fatal warnings (p > 1/2 lies outside the analyzed regime).
  std::vector<std::string> Validate() const;

  // gamma = rho (1 - p) / p.
  double gamma() const { return rho * (1.0 - p) / p; }
  // h(gamma) = (1 + gamma) log(1 + gamma) - gamma.
  double h_gamma() const;
};

double RateFunctionH(double gamma);

// Weighted view of a simple graph: weight(u,v) = 1{uv in E} - p off the
// diagonal and 0 on it. Weights are computed from the bitset on demand.
class CenteredGraph {
 public:
  CenteredGraph(SimpleGraph base, double p);

  const SimpleGraph& base() const { return base_; }
  double p() const { return p_; }
  int num_vertices() const { return base_.num_vertices(); }

  double weight(int u, int v) const {
    if (u == v) return 0.0;
    return base_.has_edge(u, v) ? 1.0 - p_ : -p_;
  }

 private:
  SimpleGraph base_;
  double p_;
};

// Throws ParameterError unless p in (0, 1).
CenteredGraph Center(SimpleGraph g, double p);

}  // namespace corrdetect

#endif  // CORRDETECT_GRAPH_H_
