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

#include "corrdetect/theory.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "corrdetect/errors.h"
#include "fmt/format.h"

namespace corrdetect {

double OverlapPmf(int n, int s, int t) {
  if (n < 0 || s < 0 || s > n) throw ParameterError(fmt::format("need 0 <= s <= n, got s = {}, n = {}", s, n));
  if (t < 0 || t > s || s - t > n - s) return 0.0;
  auto log_choose = [](int a, int b) {
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
  };
  return std::exp(log_choose(s, t) + log_choose(n - s, s - t) - log_choose(n, s));
}

namespace {

void CheckInputs(const Permutation& pi, const Permutation& pit, const VertexSample& v1,
                 const VertexSample& v2) {
  if (v1.size() != v2.size()) throw ParameterError("samples must have equal size");
  if (v1.parent_n != v2.parent_n || pi.size() != v1.parent_n || pit.size() != v1.parent_n)
    throw ParameterError("samples and permutations disagree on the parent size");
  v1.Validate();
  v2.Validate();
}

std::vector<int> Common(const Permutation& pi, const VertexSample& v1, const std::vector<char>& in2) {
  std::vector<int> out;
  for (int v : v1.chosen)
    if (in2[pi(v)]) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

struct UnionFind {
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Unite(int a, int b) { parent[Find(a)] = Find(b); }
  std::vector<int> parent;
};

struct Digraph {
  // Merged nodes after union-find: representative -> component data.
  std::vector<int> rep;        // node -> merged representative
  std::vector<char> is_g1;     // node -> whether it is a G1 pair
  std::vector<int64_t> pair;   // node -> a * n + b
  std::vector<std::pair<int, int>> arcs;  // between merged representatives
};

Digraph Build(const Permutation& pi, const Permutation& pit, const VertexSample& v1,
              const VertexSample& v2) {
  const int64_t n = v1.parent_n;
  std::vector<char> in2(n, 0);
  for (int v : v2.chosen) in2[v] = 1;
  const std::vector<int> s_pi = Common(pi, v1, in2), s_pit = Common(pit, v1, in2);

  Digraph g;
  std::unordered_map<int64_t, int> g1_index, g2_index;
  auto node = [&](bool side_g1, int a, int b) {
    if (a > b) std::swap(a, b);
    const int64_t key = a * n + b;
    auto& index = side_g1 ? g1_index : g2_index;
    auto [it, inserted] = index.emplace(key, static_cast<int>(g.is_g1.size()));
    if (inserted) {
      g.is_g1.push_back(side_g1);
      g.pair.push_back(key);
    }
    return it->second;
  };
  std::vector<std::pair<int, int>> raw_arcs, merges;
  for (size_t i = 0; i < s_pi.size(); ++i)
    for (size_t j = i + 1; j < s_pi.size(); ++j)
      raw_arcs.emplace_back(node(true, s_pi[i], s_pi[j]), node(false, pi(s_pi[i]), pi(s_pi[j])));
  for (size_t i = 0; i < s_pit.size(); ++i)
    for (size_t j = i + 1; j < s_pit.size(); ++j)
      merges.emplace_back(node(true, s_pit[i], s_pit[j]), node(false, pit(s_pit[i]), pit(s_pit[j])));
  UnionFind uf(g.is_g1.size());
  for (auto [a, b] : merges) uf.Unite(a, b);
  g.rep.resize(g.is_g1.size());
  for (size_t x = 0; x < g.rep.size(); ++x) g.rep[x] = uf.Find(static_cast<int>(x));
  for (auto [a, b] : raw_arcs) g.arcs.emplace_back(g.rep[a], g.rep[b]);
  return g;
}

// For each node, the component id and whether that component is a cycle.
struct Components {
  std::vector<int> id;
  std::vector<char> cycle;
  std::vector<int64_t> size;
};

Components Classify(const Digraph& g) {
  const size_t n = g.rep.size();
  std::vector<int> in(n, 0), out(n, 0);
  UnionFind uf(n);
  for (size_t x = 0; x < n; ++x) uf.Unite(static_cast<int>(x), g.rep[x]);
  for (auto [a, b] : g.arcs) {
    ++out[a];
    ++in[b];
    uf.Unite(a, b);
  }
  Components c;
  std::unordered_map<int, int> component_of_root;
  c.id.resize(n);
  for (size_t x = 0; x < n; ++x) {
    auto [it, inserted] = component_of_root.emplace(uf.Find(static_cast<int>(x)),
                                                    static_cast<int>(c.cycle.size()));
    if (inserted) {
      c.cycle.push_back(1);
      c.size.push_back(0);
    }
    c.id[x] = it->second;
  }
  for (size_t x = 0; x < n; ++x) {
    if (g.rep[x] == static_cast<int>(x) && (in[x] != 1 || out[x] != 1)) c.cycle[c.id[x]] = 0;
    if (g.is_g1[x]) ++c.size[c.id[x]];
  }
  return c;
}

}  // namespace

DigraphDecomposition DecomposeFunctionalDigraph(const Permutation& pi, const Permutation& pit,
                                                const VertexSample& v1, const VertexSample& v2) {
  CheckInputs(pi, pit, v1, v2);
  const Components c = Classify(Build(pi, pit, v1, v2));
  DigraphDecomposition d;
  for (size_t k = 0; k < c.cycle.size(); ++k) (c.cycle[k] ? d.cycles : d.paths).push_back(c.size[k]);
  std::sort(d.paths.begin(), d.paths.end());
  std::sort(d.cycles.begin(), d.cycles.end());
  return d;
}

std::vector<int> CycleVertices(const Permutation& pi, const Permutation& pit, const VertexSample& v1,
                               const VertexSample& v2) {
  CheckInputs(pi, pit, v1, v2);
  const Digraph g = Build(pi, pit, v1, v2);
  const Components c = Classify(g);
  const int64_t n = v1.parent_n;
  std::vector<int> out;
  for (size_t x = 0; x < g.is_g1.size(); ++x) {
    if (!g.is_g1[x] || !c.cycle[c.id[x]]) continue;
    out.push_back(static_cast<int>(g.pair[x] / n));
    out.push_back(static_cast<int>(g.pair[x] % n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> CoreSet(const Permutation& pi, const Permutation& pit, const VertexSample& v1,
                         const VertexSample& v2) {
  CheckInputs(pi, pit, v1, v2);
  const int n = v1.parent_n;
  std::vector<char> in2(n, 0), in_s(n, 0);
  for (int v : v2.chosen) in2[v] = 1;
  for (int v : v1.chosen) in_s[v] = in2[pi(v)];
  const Permutation sigma = pit.Inverse().Compose(pi);
  std::vector<char> visited(n, 0);
  std::vector<int> out;
  for (int start : v1.chosen) {
    if (visited[start]) continue;
    std::vector<int> orbit;
    bool inside = true;
    for (int x = start; !visited[x]; x = sigma(x)) {
      visited[x] = 1;
      orbit.push_back(x);
      inside = inside && in_s[x];
    }
    if (inside) out.insert(out.end(), orbit.begin(), orbit.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

double TailBound(TailKind kind, const TailParams& q) {
  if (!(q.eps > 0.0)) throw ParameterError(fmt::format("deviation {} must be positive", q.eps));
  const double e = q.eps;
  switch (kind) {
    case TailKind::kHypergeometricUpper:
    case TailKind::kHypergeometricLower: {
      if (q.n <= 0 || q.s < 0 || q.s > q.n)
        throw ParameterError(fmt::format("need 0 <= s <= n, n > 0; got s = {}, n = {}", q.s, q.n));
      const double n = q.n, s = q.s;
      const double first = kind == TailKind::kHypergeometricUpper ? e * e * s * s / ((2.0 + e) * n)
                                                                  : e * e * s * s / (2.0 * n);
      return std::min(std::exp(-first), std::exp(-e * e * s * s * s / (n * n)));
    }
    case TailKind::kBinomialUpperLog:
    case TailKind::kBinomialLower:
    case TailKind::kBinomialUpper: {
      if (!(q.mu >= 0.0)) throw ParameterError(fmt::format("mean mu = {} must be non-negative", q.mu));
      if (kind == TailKind::kBinomialUpperLog)
        return std::exp(-q.mu * ((1.0 + e) * std::log1p(e) - e));
      if (kind == TailKind::kBinomialLower) return std::exp(-e * e * q.mu / 2.0);
      return std::exp(-e * e * q.mu / (2.0 + e));
    }
  }
  throw ParameterError("unknown tail kind");
}

}  // namespace corrdetect
