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

#ifndef CORRDETECT_THEORY_H_
#define CORRDETECT_THEORY_H_

#include <cstdint>
#include <vector>

#include "corrdetect/graph.h"

namespace corrdetect {

// P(HG(n, s, s) = t) = C(s,t) C(n-s,s-t) / C(n,s); 0 outside the support.
double OverlapPmf(int n, int s, int t);

// Path and cycle components of the correlated functional digraph of two
// alignments. A component's size is the number of G1 vertex pairs in it.
struct DigraphDecomposition {
  std::vector<int64_t> paths;
  std::vector<int64_t> cycles;
};

// Nodes are the pairs of S_pi, S_pit (inside V1) and T_pi, T_pit (inside
// V2), where S_pi = {v in V1 : pi(v) in V2} and T_pi = pi(S_pi). Adds the arc
// e -> pi(e) for every pair e of S_pi and merges e with pit(e) for every pair
// of S_pit. ParameterError on mismatched sizes.
DigraphDecomposition DecomposeFunctionalDigraph(const Permutation& pi, const Permutation& pit,
                                                const VertexSample& v1, const VertexSample& v2);

// G1 vertices incident to a pair lying in a cycle component, sorted.
std::vector<int> CycleVertices(const Permutation& pi, const Permutation& pit,
                               const VertexSample& v1, const VertexSample& v2);

// Largest I within V1 with pi(I) = pit(I) inside V2: the union of the orbits
// of pit^-1 pi that stay inside S_pi. Sorted.
std::vector<int> CoreSet(const Permutation& pi, const Permutation& pit, const VertexSample& v1,
                         const VertexSample& v2);

enum class TailKind {
  // P(HG >= (1+eps) s^2/n) <= exp(-eps^2 s^2 / ((2+eps) n)) ^ exp(-eps^2 s^3 / n^2).
  kHypergeometricUpper,
  // P(HG <= (1-eps) s^2/n) <= exp(-eps^2 s^2 / (2n)) ^ exp(-eps^2 s^3 / n^2).
  kHypergeometricLower,
  // P(Bin >= (1+delta) mu) <= exp(-mu ((1+delta) log(1+delta) - delta)).
  kBinomialUpperLog,
  // P(Bin <= (1-delta) mu) <= exp(-delta^2 mu / 2).
  kBinomialLower,
  // P(Bin >= (1+delta) mu) <= exp(-delta^2 mu / (2+delta)).
  kBinomialUpper,
};

struct TailParams {
  // Hypergeometric kinds.
  int n = 0;
  int s = 0;
  // Binomial kinds.
  double mu = 0.0;
  // eps for the hypergeometric kinds, delta for the binomial ones.
  double eps = 0.0;
};

// ParameterError for eps <= 0 or invalid distribution parameters.
double TailBound(TailKind kind, const TailParams& params);

}  // namespace corrdetect

#endif  // CORRDETECT_THEORY_H_
