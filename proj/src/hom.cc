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

#include "corrdetect/hom.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "corrdetect/errors.h"
#include "fmt/format.h"

namespace corrdetect {

MultiMotif MultiMotif::FromMotif(const Motif& m) {
  MultiMotif out(m.num_vertices());
  for (auto [a, b] : m.edges()) out.AddEdge(a, b);
  return out;
}

void MultiMotif::AddEdge(int u, int w, int count) {
  if (u < 0 || w < 0 || u >= v_ || w >= v_) throw ParameterError("multimotif vertex out of range");
  if (count < 1) throw ParameterError("edge multiplicity must be positive");
  if (u == w) {
    loops_[u] += count;
  } else {
    edges_[{std::min(u, w), std::max(u, w)}] += count;
  }
}

bool MultiMotif::has_loops() const {
  return std::any_of(loops_.begin(), loops_.end(), [](int c) { return c > 0; });
}

int MultiMotif::total_edges() const {
  int total = 0;
  for (const auto& [e, c] : edges_) total += c;
  for (int c : loops_) total += c;
  return total;
}

SmallMultigraph MultiMotif::ToSmallMultigraph() const {
  SmallMultigraph g(v_);
  for (const auto& [e, c] : edges_) g.Add(e.first, e.second, c);
  for (int u = 0; u < v_; ++u)
    if (loops_[u]) g.Add(u, u, loops_[u]);
  return g;
}

MultiMotif Quotient(const MultiMotif& m, std::span<const int> block_of) {
  if (static_cast<int>(block_of.size()) != m.num_vertices())
    throw ParameterError("partition does not cover the motif");
  int k = 0;
  for (int b : block_of) {
    if (b < 0) throw ParameterError("negative block index");
    k = std::max(k, b + 1);
  }
  MultiMotif q(k);
  for (int u = 0; u < m.num_vertices(); ++u)
    if (m.loops(u)) q.AddEdge(block_of[u], block_of[u], m.loops(u));
  for (const auto& [e, c] : m.edges()) q.AddEdge(block_of[e.first], block_of[e.second], c);
  return q;
}

std::vector<PartitionTerm> PartitionTerms(int v) {
  if (v < 0) throw ParameterError("vertex count must be non-negative");
  if (v > 8) throw CapacityError(fmt::format("partition enumeration supports v <= 8, got {}", v));
  std::vector<PartitionTerm> out;
  std::vector<int> rgs(v, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == v) {
      std::vector<int> size(blocks, 0);
      for (int b : rgs) ++size[b];
      int64_t mobius = 1;
      for (int sz : size) {
        for (int f = 2; f < sz; ++f) mobius *= f;
        if (sz % 2 == 0) mobius = -mobius;
      }
      out.push_back({rgs, blocks, mobius});
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

const Eigen::MatrixXd& WeightPowers::Power(int m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  const int s = g_.num_vertices();
  const double hi = std::pow(1.0 - g_.p(), m), lo = std::pow(-g_.p(), m);
  Eigen::MatrixXd w(s, s);
  const SimpleGraph& base = g_.base();
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < s; ++i) w(i, j) = i == j ? 0.0 : (base.has_edge(i, j) ? hi : lo);
  return cache_.emplace(m, std::move(w)).first->second;
}

namespace {

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Table over the images of `scope` (sorted), row-major in scope order.
struct Factor {
  std::vector<int> scope;
  std::vector<double> data;
};

size_t TableSize(int s, size_t arity) {
  const double size = std::pow(static_cast<double>(s), static_cast<double>(arity));
  if (size > 5e8)
    throw CapacityError(fmt::format("elimination table of {} entries is too large", size));
  return static_cast<size_t>(size);
}

// Factor with scope {x, other} as a dense matrix indexed (x, other).
Eigen::MatrixXd Oriented(const Factor& f, int x, int s) {
  Eigen::Map<const RowMajorMatrix> m(f.data.data(), s, s);
  if (f.scope[0] == x) return m;
  return m.transpose();
}

Factor EliminateFast(int x, const std::vector<const Factor*>& gathered,
                     const std::vector<int>& rest, int s) {
  Eigen::VectorXd u = Eigen::VectorXd::Ones(s);
  for (const Factor* f : gathered)
    if (f->scope.size() == 1) u.array() *= Eigen::Map<const Eigen::ArrayXd>(f->data.data(), s);
  auto hadamard = [&](int other) {
    Eigen::MatrixXd prod;
    bool first = true;
    for (const Factor* f : gathered) {
      if (f->scope.size() != 2 || (f->scope[0] != other && f->scope[1] != other)) continue;
      if (first) {
        prod = Oriented(*f, x, s);
        first = false;
      } else {
        prod.array() *= Oriented(*f, x, s).array();
      }
    }
    return prod;
  };
  Factor out{rest, {}};
  if (rest.empty()) {
    out.data = {u.sum()};
  } else if (rest.size() == 1) {
    const Eigen::VectorXd r = hadamard(rest[0]).transpose() * u;
    out.data.assign(r.data(), r.data() + s);
  } else {
    const Eigen::MatrixXd by = hadamard(rest[0]);
    const Eigen::MatrixXd bz = hadamard(rest[1]);
    out.data.resize(static_cast<size_t>(s) * s);
    Eigen::Map<RowMajorMatrix>(out.data.data(), s, s) = by.transpose() * u.asDiagonal() * bz;
  }
  return out;
}

Factor EliminateGeneric(int x, const std::vector<const Factor*>& gathered,
                        const std::vector<int>& rest, int s) {
  const size_t k = rest.size();
  Factor out{rest, std::vector<double>(TableSize(s, k), 0.0)};
  // For each factor, (position in `rest` or -1 for x, stride) per scope slot.
  std::vector<std::vector<std::pair<int, size_t>>> layout;
  for (const Factor* f : gathered) {
    std::vector<std::pair<int, size_t>> slots;
    size_t stride = 1;
    for (size_t i = f->scope.size(); i-- > 0;) {
      const int var = f->scope[i];
      const int pos = var == x ? -1
                               : static_cast<int>(std::lower_bound(rest.begin(), rest.end(), var) -
                                                  rest.begin());
      slots.emplace_back(pos, stride);
      stride *= s;
    }
    layout.push_back(std::move(slots));
  }
  std::vector<int> assign(k, 0);
  for (size_t idx = 0; idx < out.data.size(); ++idx) {
    double total = 0.0;
    for (int xv = 0; xv < s; ++xv) {
      double prod = 1.0;
      for (size_t fi = 0; fi < gathered.size() && prod != 0.0; ++fi) {
        size_t offset = 0;
        for (const auto& [pos, stride] : layout[fi])
          offset += stride * static_cast<size_t>(pos < 0 ? xv : assign[pos]);
        prod *= gathered[fi]->data[offset];
      }
      total += prod;
    }
    out.data[idx] = total;
    for (size_t i = k; i-- > 0;) {
      if (++assign[i] < s) break;
      assign[i] = 0;
    }
  }
  return out;
}

std::vector<int> Neighborhood(int x, const std::vector<Factor>& factors) {
  std::vector<int> out;
  for (const Factor& f : factors)
    if (std::binary_search(f.scope.begin(), f.scope.end(), x))
      for (int y : f.scope)
        if (y != x) out.push_back(y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

double HomWeighted(const MultiMotif& h, WeightPowers& weights, std::optional<std::span<const int>> order) {
  if (h.has_loops()) return 0.0;
  const int v = h.num_vertices();
  const int s = weights.size();
  std::vector<Factor> factors;
  for (const auto& [e, c] : h.edges()) {
    const Eigen::MatrixXd& w = weights.Power(c);
    factors.push_back({{e.first, e.second}, std::vector<double>(w.data(), w.data() + w.size())});
  }
  std::vector<char> done(v, 0);
  if (order) {
    std::vector<int> check(order->begin(), order->end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < static_cast<int>(check.size()); ++i)
      if (check[i] != i || static_cast<int>(check.size()) != v)
        throw ParameterError("elimination order must list every motif vertex once");
  }
  double scalar = 1.0;
  for (int step = 0; step < v; ++step) {
    int x = -1;
    std::vector<int> rest;
    if (order) {
      x = (*order)[step];
      rest = Neighborhood(x, factors);
    } else {
      for (int y = 0; y < v; ++y) {
        if (done[y]) continue;
        std::vector<int> nb = Neighborhood(y, factors);
        if (x < 0 || nb.size() < rest.size()) {
          x = y;
          rest = std::move(nb);
        }
      }
    }
    done[x] = 1;
    std::vector<Factor> kept;
    std::vector<Factor> taken;
    for (Factor& f : factors)
      (std::binary_search(f.scope.begin(), f.scope.end(), x) ? taken : kept).push_back(std::move(f));
    if (taken.empty()) {
      scalar *= s;
      factors = std::move(kept);
      continue;
    }
    std::vector<const Factor*> gathered;
    bool small = rest.size() <= 2;
    for (const Factor& f : taken) {
      gathered.push_back(&f);
      small = small && f.scope.size() <= 2;
    }
    Factor next = small ? EliminateFast(x, gathered, rest, s) : EliminateGeneric(x, gathered, rest, s);
    if (next.scope.empty()) {
      scalar *= next.data[0];
    } else {
      kept.push_back(std::move(next));
    }
    factors = std::move(kept);
  }
  return scalar;
}

double HomWeighted(const MultiMotif& h, const CenteredGraph& g, std::optional<std::span<const int>> order) {
  WeightPowers weights(g);
  return HomWeighted(h, weights, order);
}

double InjWeighted(const Motif& m, const CenteredGraph& g) {
  if (m.num_vertices() > g.num_vertices()) return 0.0;
  const MultiMotif mm = MultiMotif::FromMotif(m);
  WeightPowers weights(g);
  double total = 0.0;
  for (const PartitionTerm& t : PartitionTerms(m.num_vertices())) {
    const MultiMotif q = Quotient(mm, t.block_of);
    if (q.has_loops()) continue;
    total += static_cast<double>(t.mobius) * HomWeighted(q, weights);
  }
  return total;
}

namespace {

double BruteSum(const MultiMotif& m, const CenteredGraph& g, bool injective) {
  const int v = m.num_vertices(), s = g.num_vertices();
  if (std::pow(static_cast<double>(s), v) > 1e8)
    throw CapacityError(fmt::format("brute force over {}^{} maps exceeds the 1e8 guard", s, v));
  if (injective && v > s) return 0.0;
  std::vector<int> image(v, 0);
  std::vector<char> used(s, 0);
  double total = 0.0;
  std::function<void(int)> rec = [&](int i) {
    if (i == v) {
      double prod = 1.0;
      for (int u = 0; u < v; ++u)
        if (m.loops(u)) prod = 0.0;
      for (const auto& [e, c] : m.edges())
        prod *= std::pow(g.weight(image[e.first], image[e.second]), c);
      total += prod;
      return;
    }
    for (int x = 0; x < s; ++x) {
      if (injective && used[x]) continue;
      image[i] = x;
      used[x] = 1;
      rec(i + 1);
      used[x] = 0;
    }
  };
  rec(0);
  return total;
}

}  // namespace

double InjBruteforce(const MultiMotif& m, const CenteredGraph& g) { return BruteSum(m, g, true); }

double InjBruteforce(const Motif& m, const CenteredGraph& g) {
  return BruteSum(MultiMotif::FromMotif(m), g, true);
}

double HomBruteforce(const MultiMotif& m, const CenteredGraph& g) { return BruteSum(m, g, false); }

InjectivePlan::InjectivePlan(const std::vector<Motif>& motifs) {
  std::map<std::string, size_t> index;
  for (const Motif& m : motifs) {
    const MultiMotif mm = MultiMotif::FromMotif(m);
    std::map<size_t, double> coeff;
    for (const PartitionTerm& t : PartitionTerms(m.num_vertices())) {
      const MultiMotif q = Quotient(mm, t.block_of);
      if (q.has_loops()) continue;
      const CanonicalLabeling c = Canonicalize(q.ToSmallMultigraph());
      auto [it, inserted] = index.emplace(c.key, classes_.size());
      if (inserted) {
        MultiMotif canon(q.num_vertices());
        for (const auto& [e, mult] : q.edges())
          canon.AddEdge(c.position[e.first], c.position[e.second], mult);
        classes_.push_back(std::move(canon));
      }
      coeff[it->second] += static_cast<double>(t.mobius);
    }
    std::vector<Term> terms;
    for (const auto& [cls, c] : coeff)
      if (c != 0.0) terms.push_back({cls, c});
    terms_.push_back(std::move(terms));
    motif_vertices_.push_back(m.num_vertices());
  }
}

std::vector<double> InjectivePlan::Evaluate(const CenteredGraph& g) const {
  WeightPowers weights(g);
  std::vector<double> hom(classes_.size());
  for (size_t i = 0; i < classes_.size(); ++i) hom[i] = HomWeighted(classes_[i], weights);
  std::vector<double> out(terms_.size(), 0.0);
  for (size_t k = 0; k < terms_.size(); ++k) {
    if (motif_vertices_[k] > g.num_vertices()) continue;
    for (const Term& t : terms_[k]) out[k] += t.coefficient * hom[t.class_index];
  }
  return out;
}

}  // namespace corrdetect
