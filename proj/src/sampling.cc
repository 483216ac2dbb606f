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

#include "corrdetect/sampling.h"

#include <vector>

#include "corrdetect/errors.h"
#include "fmt/format.h"

namespace corrdetect {

SimpleGraph SampleEr(int n, double p, Rng& rng) {
  if (n < 0) throw ParameterError("vertex count must be non-negative");
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterError(fmt::format("edge probability p = {} outside [0, 1]", p));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.Bernoulli(p)) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

SimpleGraph SampleEr(int n, double p, uint64_t seed) {
  Rng rng(seed);
  return SampleEr(n, p, rng);
}

CorrelatedPair SampleCorrelatedPair(int n, double p, double rho, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterError(fmt::format("edge probability p = {} outside [0, 1]", p));
  if (p == 0.0 || p == 1.0)
    throw DegenerateError("correlation is undefined for p in {0, 1}");
  if (!(rho >= 0.0 && rho <= 1.0))
    throw ParameterError(fmt::format("correlation rho = {} outside [0, 1]", rho));
  Permutation pi(rng.Permutation(n));
  const double p_given_edge = p + rho * (1.0 - p);
  const double p_given_none = p * (1.0 - rho);
  std::vector<Edge> e1, e2;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool in1 = rng.Bernoulli(p);
      if (in1) e1.emplace_back(u, v);
      if (rng.Bernoulli(in1 ? p_given_edge : p_given_none))
        e2.emplace_back(pi(u), pi(v));
    }
  }
  return {SimpleGraph(n, e1), SimpleGraph(n, e2), std::move(pi)};
}

CorrelatedPair SampleCorrelatedPair(int n, double p, double rho, uint64_t seed) {
  Rng rng(seed);
  return SampleCorrelatedPair(n, p, rho, rng);
}

InducedSample SampleInducedSubgraph(const SimpleGraph& g, int s, Rng& rng) {
  if (s < 0 || s > g.num_vertices()) {
    throw ParameterError(fmt::format("sample size {} outside [0, {}]", s,
                                     g.num_vertices()));
  }
  VertexSample sample{g.num_vertices(),
                      rng.SampleWithoutReplacement(g.num_vertices(), s)};
  SimpleGraph sub = g.Induced(sample.chosen);
  return {std::move(sub), std::move(sample)};
}

InducedSample SampleInducedSubgraph(const SimpleGraph& g, int s, uint64_t seed) {
  Rng rng(seed);
  return SampleInducedSubgraph(g, s, rng);
}

int OverlapSize(const VertexSample& v1, const VertexSample& v2,
                const Permutation& pi) {
  if (v1.parent_n != v2.parent_n || pi.size() != v1.parent_n)
    throw ParameterError("samples and permutation disagree on parent size");
  std::vector<char> in2(v2.parent_n, 0);
  for (int v : v2.chosen) in2[v] = 1;
  int count = 0;
  for (int v : v1.chosen) count += in2[pi(v)];
  return count;
}

}  // namespace corrdetect
