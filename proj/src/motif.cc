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

#include "corrdetect/motif.h"

#include <algorithm>
#include <numeric>

#include "corrdetect/errors.h"
#include "fmt/format.h"

namespace corrdetect {

Motif::Motif(int v, std::span<const Edge> edges) : v_(v) {
  if (v < 0) throw ParameterError("motif vertex count must be non-negative");
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v || b >= v)
      throw ParameterError(fmt::format("motif edge ({}, {}) out of range", a, b));
    if (a == b) throw ParameterError("motifs may not contain loops");
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ParameterError("motifs may not contain repeated edges");
  if (v_ <= kMaxCanonicalVertices) {
    const SmallMultigraph g = ToMultigraph();
    CanonicalLabeling c = Canonicalize(g);
    key_ = std::move(c.key);
    position_ = std::move(c.position);
    aut_ = CountAutomorphisms(g);
  }
}

Motif Motif::FromGraph(const SimpleGraph& g) {
  const std::vector<Edge> e = g.edges();
  return Motif(g.num_vertices(), e);
}

bool Motif::has_edge(int u, int w) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            Edge(std::min(u, w), std::max(u, w)));
}

int Motif::degree(int u) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == u) + (b == u);
  return d;
}

int Motif::max_degree() const {
  std::vector<int> deg(v_, 0);
  for (auto [a, b] : edges_) {
    ++deg[a];
    ++deg[b];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Motif::is_connected() const {
  if (v_ <= 1) return true;
  std::vector<int> parent(v_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = v_;
  for (auto [a, b] : edges_) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

const std::string& Motif::canonical_key() const {
  if (v_ > kMaxCanonicalVertices)
    throw CapacityError(fmt::format("motif with {} vertices exceeds canonical labeling capacity", v_));
  return key_;
}

uint64_t Motif::automorphism_count() const {
  canonical_key();
  return aut_;
}

Motif Motif::Canonical() const {
  canonical_key();
  return Relabeled(position_);
}

Motif Motif::Relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != v_) throw ParameterError("relabeling size mismatch");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto [a, b] : edges_) out.emplace_back(perm[a], perm[b]);
  return Motif(v_, out);
}

SmallMultigraph Motif::ToMultigraph() const {
  SmallMultigraph g(v_);
  for (auto [a, b] : edges_) g.Add(a, b);
  return g;
}

std::string Motif::ToString() const {
  std::string out = fmt::format("v={} [", v_);
  for (size_t i = 0; i < edges_.size(); ++i)
    out += fmt::format("{}{}-{}", i ? " " : "", edges_[i].first, edges_[i].second);
  return out + "]";
}

bool IsIsomorphic(const Motif& a, const Motif& b) {
  return a.canonical_key() == b.canonical_key();
}

}  // namespace corrdetect
