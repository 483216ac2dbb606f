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

#include "corrdetect/motif_families.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "corrdetect/errors.h"
#include "corrdetect/rng.h"
#include "fmt/format.h"

namespace corrdetect {

std::string FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kTrees: return "trees";
    case FamilyKind::kBoundedDegree: return "bounded-degree";
    case FamilyKind::kStructuredBd: return "structured-bd";
    case FamilyKind::kSimpleNoIsolated: return "simple-no-isolated";
    case FamilyKind::kCustom: return "custom";
  }
  return "custom";
}

MotifFamily MakeFamily(FamilyKind kind, const std::vector<Motif>& motifs) {
  MotifFamily family{kind, {}};
  std::set<std::string> seen;
  for (const Motif& m : motifs)
    if (seen.insert(m.canonical_key()).second) family.members.push_back(m.Canonical());
  std::sort(family.members.begin(), family.members.end(), [](const Motif& a, const Motif& b) {
    if (a.num_vertices() != b.num_vertices()) return a.num_vertices() < b.num_vertices();
    if (a.num_edges() != b.num_edges()) return a.num_edges() < b.num_edges();
    return a.canonical_key() < b.canonical_key();
  });
  return family;
}

namespace {

// Grows graphs one edge at a time, deduplicating each level by canonical key.
// Returns every level 0..steps.
std::vector<std::vector<Motif>> Grow(const Motif& seed, int steps, int cap,
                                     std::vector<Motif> (*extend)(const Motif&, int),
                                     const EnumerationOptions& opts) {
  std::optional<Rng> rng;
  if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);
  std::vector<std::vector<Motif>> levels{{seed}};
  for (int step = 0; step < steps; ++step) {
    std::vector<Motif> candidates;
    for (const Motif& m : levels.back()) {
      std::vector<Motif> next = extend(m, cap);
      candidates.insert(candidates.end(), next.begin(), next.end());
    }
    if (rng) {
      rng->Shuffle(candidates);
      for (Motif& m : candidates) m = m.Relabeled(rng->Permutation(m.num_vertices()));
    }
    levels.push_back(MakeFamily(FamilyKind::kCustom, candidates).members);
  }
  return levels;
}

Motif WithEdge(const Motif& m, int extra_vertices, Edge e) {
  std::vector<Edge> edges = m.edges();
  edges.push_back(e);
  return Motif(m.num_vertices() + extra_vertices, edges);
}

std::vector<Motif> AddLeaf(const Motif& m, int /*cap*/) {
  std::vector<Motif> out;
  for (int u = 0; u < m.num_vertices(); ++u)
    out.push_back(WithEdge(m, 1, {u, m.num_vertices()}));
  return out;
}

std::vector<Motif> AddEdgeDegreeCapped(const Motif& m, int d) {
  std::vector<Motif> out;
  const int v = m.num_vertices();
  for (int a = 0; a < v; ++a) {
    if (m.degree(a) >= d) continue;
    for (int b = a + 1; b < v; ++b)
      if (m.degree(b) < d && !m.has_edge(a, b)) out.push_back(WithEdge(m, 0, {a, b}));
    out.push_back(WithEdge(m, 1, {a, v}));
  }
  return out;
}

std::vector<Motif> AddAnyEdge(const Motif& m, int /*cap*/) {
  std::vector<Motif> out;
  const int v = m.num_vertices();
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b)
      if (!m.has_edge(a, b)) out.push_back(WithEdge(m, 0, {a, b}));
    out.push_back(WithEdge(m, 1, {a, v}));
  }
  out.push_back(WithEdge(m, 2, {v, v + 1}));
  return out;
}

}  // namespace

MotifFamily EnumerateFreeTrees(int ne, const EnumerationOptions& opts) {
  if (ne < 0) throw ParameterError("tree edge count must be non-negative");
  if (ne > 9) throw CapacityError(fmt::format("tree enumeration supports Ne <= 9, got {}", ne));
  auto levels = Grow(Motif(1, {}), ne, 0, AddLeaf, opts);
  return MakeFamily(FamilyKind::kTrees, levels.back());
}

MotifFamily EnumerateBoundedDegree(int ne, int d, const EnumerationOptions& opts) {
  if (ne < 1 || d < 1) throw ParameterError("bounded-degree family needs Ne >= 1 and d >= 1");
  if (ne > 9)
    throw CapacityError(fmt::format("bounded-degree enumeration supports Ne <= 9, got {}", ne));
  auto levels = Grow(Motif(2, {{0, 1}}), ne - 1, d, AddEdgeDegreeCapped, opts);
  return MakeFamily(FamilyKind::kBoundedDegree, levels.back());
}

MotifFamily EnumerateSimpleNoIsolated(int max_edges, const EnumerationOptions& opts) {
  if (max_edges < 0) throw ParameterError("edge budget must be non-negative");
  if (max_edges > 5)
    throw CapacityError(fmt::format("simple-graph enumeration supports <= 5 edges, got {}", max_edges));
  auto levels = Grow(Motif(0, {}), max_edges, 0, AddAnyEdge, opts);
  std::vector<Motif> all;
  for (const auto& level : levels) all.insert(all.end(), level.begin(), level.end());
  return MakeFamily(FamilyKind::kSimpleNoIsolated, all);
}

MotifFamily EnumerateStructuredBd(int ell, int d) {
  if (ell < 1 || d < 3) throw ParameterError("structured family needs ell >= 1 and d >= 3");
  const int paths = d - 1;
  const int nv = ell * paths + 4;
  if (nv > kMaxCanonicalVertices)
    throw CapacityError(fmt::format("structured family has {} vertices, limit {}", nv,
                                    kMaxCanonicalVertices));
  // Vertices: 0, 1 central; 2, 3 their pendants; internal vertex k of path i
  // is 4 + i * ell + k, with k = 0 next to vertex 0.
  auto internal = [ell](int path, int k) { return 4 + path * ell + k; };
  std::vector<Edge> base{{0, 2}, {1, 3}};
  for (int i = 0; i < paths; ++i) {
    base.emplace_back(0, internal(i, 0));
    for (int k = 0; k + 1 < ell; ++k) base.emplace_back(internal(i, k), internal(i, k + 1));
    base.emplace_back(internal(i, ell - 1), 1);
  }
  std::vector<std::pair<int, int>> path_pairs;
  for (int i = 0; i < paths; ++i)
    for (int j = i + 1; j < paths; ++j) path_pairs.emplace_back(i, j);

  std::vector<std::vector<int>> matchings;
  std::vector<int> perm(ell);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    matchings.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Motif> motifs;
  std::set<std::string> seen;
  std::vector<size_t> choice(path_pairs.size(), 0);
  for (;;) {
    std::vector<Edge> edges = base;
    for (size_t q = 0; q < path_pairs.size(); ++q) {
      const auto [i, j] = path_pairs[q];
      for (int k = 0; k < ell; ++k)
        edges.emplace_back(internal(i, k), internal(j, matchings[choice[q]][k]));
    }
    Motif m(nv, edges);
    if (seen.insert(m.canonical_key()).second) motifs.push_back(m);
    size_t q = 0;
    while (q < choice.size() && ++choice[q] == matchings.size()) choice[q++] = 0;
    if (q == choice.size()) break;
  }
  return MakeFamily(FamilyKind::kStructuredBd, motifs);
}

double StructuredBdSizeLowerBound(int ell, int d) {
  if (ell < 1 || d < 3) throw ParameterError("structured family needs ell >= 1 and d >= 3");
  const double ne = d * (d - 1) / 2.0 * ell + d + 1;
  const double r = ne - d - 1;
  const double base =
      2.0 * r / (std::numbers::e * std::pow(d, static_cast<double>(d) / (d - 2)) * (d - 1));
  return 0.5 * std::pow(base, (d - 2) * r / d);
}

}  // namespace corrdetect
