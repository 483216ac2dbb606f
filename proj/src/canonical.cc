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

#include "corrdetect/canonical.h"

#include <algorithm>

#include "corrdetect/errors.h"
#include "fmt/format.h"

namespace corrdetect {

void SmallMultigraph::Add(int u, int w, int count) {
  if (u < 0 || w < 0 || u >= v_ || w >= v_)
    throw ParameterError("multigraph vertex out of range");
  const int total = at(u, w) + count;
  if (total > 255) throw CapacityError("edge multiplicity above 255");
  mult_[static_cast<size_t>(u) * v_ + w] = static_cast<uint8_t>(total);
  mult_[static_cast<size_t>(w) * v_ + u] = static_cast<uint8_t>(total);
}

namespace {

using Coloring = std::vector<int>;

void CheckCapacity(const SmallMultigraph& g) {
  if (g.num_vertices() > kMaxCanonicalVertices) {
    throw CapacityError(fmt::format("canonical labeling supports at most {} vertices, got {}",
                                    kMaxCanonicalVertices, g.num_vertices()));
  }
}

int NumColors(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Replaces colors by the rank of (color, loop, sorted neighbor color and
// multiplicity pairs) until stable. Ranks preserve the order of the input
// colors, so the result refines the input as an ordered partition.
void Refine(const SmallMultigraph& g, Coloring& color) {
  const int v = g.num_vertices();
  std::vector<std::vector<int>> sig(v);
  int colors = -1;
  for (;;) {
    for (int u = 0; u < v; ++u) {
      std::vector<std::pair<int, int>> nbrs;
      for (int w = 0; w < v; ++w)
        if (w != u && g.at(u, w) > 0) nbrs.emplace_back(color[w], g.at(u, w));
      std::sort(nbrs.begin(), nbrs.end());
      auto& s = sig[u];
      s.assign({color[u], g.at(u, u)});
      for (const auto& [c, m] : nbrs) {
        s.push_back(c);
        s.push_back(m);
      }
    }
    std::vector<std::vector<int>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int u = 0; u < v; ++u)
      color[u] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[u]) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == colors) return;
    colors = now;
  }
}

bool AreTwins(const SmallMultigraph& g, int x, int y) {
  if (g.at(x, x) != g.at(y, y)) return false;
  for (int z = 0; z < g.num_vertices(); ++z)
    if (z != x && z != y && g.at(x, z) != g.at(y, z)) return false;
  return true;
}

Coloring Individualize(const Coloring& color, int x) {
  Coloring out(color.size());
  for (size_t z = 0; z < color.size(); ++z)
    out[z] = 2 * color[z] + (color[z] == color[x] && static_cast<int>(z) != x ? 1 : 0);
  return out;
}

// First cell (in color order) with more than one vertex; empty if discrete.
std::vector<int> TargetCell(const Coloring& color) {
  std::vector<int> size(NumColors(color), 0);
  for (int c : color) ++size[c];
  for (size_t c = 0; c < size.size(); ++c) {
    if (size[c] > 1) {
      std::vector<int> cell;
      for (size_t u = 0; u < color.size(); ++u)
        if (color[u] == static_cast<int>(c)) cell.push_back(static_cast<int>(u));
      return cell;
    }
  }
  return {};
}

std::string LeafString(const SmallMultigraph& g, const Coloring& position) {
  const int v = g.num_vertices();
  std::vector<int> at_pos(v);
  for (int u = 0; u < v; ++u) at_pos[position[u]] = u;
  std::string key(1, static_cast<char>(v));
  key.reserve(1 + v * (v + 1) / 2);
  for (int i = 0; i < v; ++i)
    for (int j = i; j < v; ++j)
      key.push_back(static_cast<char>(g.at(at_pos[i], at_pos[j])));
  return key;
}

void Search(const SmallMultigraph& g, Coloring color, CanonicalLabeling& best,
            bool& have_best) {
  Refine(g, color);
  const std::vector<int> cell = TargetCell(color);
  if (cell.empty()) {
    std::string leaf = LeafString(g, color);
    if (!have_best || leaf < best.key) {
      best.key = std::move(leaf);
      best.position = color;
      have_best = true;
    }
    return;
  }
  std::vector<int> explored;
  for (int x : cell) {
    bool redundant = false;
    for (int y : explored) {
      if (AreTwins(g, x, y)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    explored.push_back(x);
    Search(g, Individualize(color, x), best, have_best);
  }
}

CanonicalLabeling CanonicalizeColored(const SmallMultigraph& g, Coloring color) {
  CanonicalLabeling best;
  bool have_best = false;
  Search(g, std::move(color), best, have_best);
  return best;
}

// |Aut| of a colored graph via orbit-stabilizer on the first nontrivial cell:
// the orbit of x0 is the set of y whose individualized colorings are
// isomorphic to that of x0.
uint64_t CountColored(const SmallMultigraph& g, Coloring color) {
  Refine(g, color);
  const std::vector<int> cell = TargetCell(color);
  if (cell.empty()) return 1;
  const int x0 = cell[0];
  Coloring fixed = Individualize(color, x0);
  const std::string key0 = CanonicalizeColored(g, fixed).key;
  uint64_t orbit = 1;
  for (size_t i = 1; i < cell.size(); ++i) {
    const int y = cell[i];
    if (AreTwins(g, x0, y) || CanonicalizeColored(g, Individualize(color, y)).key == key0)
      ++orbit;
  }
  return orbit * CountColored(g, std::move(fixed));
}

}  // namespace

CanonicalLabeling Canonicalize(const SmallMultigraph& g) {
  CheckCapacity(g);
  if (g.num_vertices() == 0) return {std::string(1, '\0'), {}};
  return CanonicalizeColored(g, Coloring(g.num_vertices(), 0));
}

uint64_t CountAutomorphisms(const SmallMultigraph& g) {
  CheckCapacity(g);
  return CountColored(g, Coloring(g.num_vertices(), 0));
}

std::string KeyToHex(const std::string& key) {
  std::string out;
  out.reserve(2 * key.size());
  for (unsigned char c : key) out += fmt::format("{:02x}", c);
  return out;
}

}  // namespace corrdetect
