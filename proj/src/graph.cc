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

#include "corrdetect/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "corrdetect/errors.h"
#include "fmt/format.h"

namespace corrdetect {

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges)
    : n_(n), words_((static_cast<size_t>(n) + 63) / 64) {
  if (n < 0) throw ParameterError("vertex count must be non-negative");
  rows_.assign(static_cast<size_t>(n) * words_, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParameterError(
          fmt::format("edge ({}, {}) out of range for n = {}", u, v, n));
    }
    if (u == v) throw ParameterError(fmt::format("self-loop at {}", u));
    if (!has_edge(u, v)) {
      Set(u, v);
      Set(v, u);
      ++num_edges_;
    }
  }
}

void SimpleGraph::Set(int u, int v) {
  rows_[Offset(u) + (v >> 6)] |= 1ULL << (v & 63);
}

SimpleGraph SimpleGraph::Complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::Path(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::Cycle(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return SimpleGraph(n, edges);
}

int SimpleGraph::degree(int u) const {
  int d = 0;
  for (size_t w = 0; w < words_; ++w) d += std::popcount(rows_[Offset(u) + w]);
  return d;
}

std::vector<int> SimpleGraph::neighbors(int u) const {
  std::vector<int> out;
  for (size_t w = 0; w < words_; ++w) {
    uint64_t bits = rows_[Offset(u) + w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

double SimpleGraph::density() const {
  if (n_ < 2) return 0.0;
  return static_cast<double>(num_edges_) /
         (0.5 * static_cast<double>(n_) * (n_ - 1));
}

SimpleGraph SimpleGraph::Induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(vertices[i], vertices[j])) edges.emplace_back(i, j);
  return SimpleGraph(k, edges);
}

SimpleGraph SimpleGraph::Relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw ParameterError("relabeling size mismatch");
  std::vector<Edge> out;
  for (const auto& [u, v] : edges()) out.emplace_back(perm[u], perm[v]);
  return SimpleGraph(n_, out);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x])
      throw ParameterError("not a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::Inverse() const {
  std::vector<int> inv(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::Compose(const Permutation& other) const {
  if (other.size() != size()) throw ParameterError("permutation size mismatch");
  std::vector<int> out(image_.size());
  for (size_t i = 0; i < image_.size(); ++i) out[i] = image_[other.image_[i]];
  return Permutation(std::move(out));
}

Injection::Injection(std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  std::vector<int> dom, img;
  for (const auto& [a, b] : pairs_) {
    dom.push_back(a);
    img.push_back(b);
  }
  std::sort(dom.begin(), dom.end());
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
    throw ParameterError("injection domain repeats a vertex");
  if (std::adjacent_find(img.begin(), img.end()) != img.end())
    throw ParameterError("injection is not injective");
}

void VertexSample::Validate() const {
  std::vector<char> seen(std::max(parent_n, 0), 0);
  for (int v : chosen) {
    if (v < 0 || v >= parent_n) throw ParameterError("sample id out of range");
    if (seen[v]) throw ParameterError("sample repeats a vertex");
    seen[v] = 1;
  }
}

std::vector<std::string> ModelParams::Validate() const {
  if (n < 0 || s < 0) throw ParameterError("n and s must be non-negative");
  if (s > n) throw ParameterError(fmt::format("sample size s = {} exceeds n = {}", s, n));
  if (!(p > 0.0 && p < 1.0))
    throw ParameterError(fmt::format("edge probability p = {} outside (0, 1)", p));
  if (!(rho >= 0.0 && rho <= 1.0))
    throw ParameterError(fmt::format("correlation rho = {} outside [0, 1]", rho));
  std::vector<std::string> warnings;
  if (p > 0.5) {
    warnings.push_back(fmt::format(
        "p = {} > 1/2 lies outside the regime the guarantees cover", p));
  }
  return warnings;
}

double RateFunctionH(double gamma) {
  return (1.0 + gamma) * std::log1p(gamma) - gamma;
}

double ModelParams::h_gamma() const { return RateFunctionH(gamma()); }

CenteredGraph::CenteredGraph(SimpleGraph base, double p)
    : base_(std::move(base)), p_(p) {
  if (!(p > 0.0 && p < 1.0))
    throw ParameterError(fmt::format("centering probability p = {} outside (0, 1)", p));
}

CenteredGraph Center(SimpleGraph g, double p) {
  return CenteredGraph(std::move(g), p);
}

}  // namespace corrdetect
