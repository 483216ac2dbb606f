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

#ifndef CORRDETECT_SAMPLING_H_
#define CORRDETECT_SAMPLING_H_

#include <cstdint>

#include "corrdetect/graph.h"
#include "corrdetect/rng.h"

namespace corrdetect {

struct CorrelatedPair {
  SimpleGraph g1;
  SimpleGraph g2;
  // Latent alignment: vertex v of g1 corresponds to vertex pi(v) of g2.
  Permutation pi;
};

struct InducedSample {
  SimpleGraph graph;
  VertexSample sample;
};

// G(n, p). Throws ParameterError unless p in [0, 1].
SimpleGraph SampleEr(int n, double p, uint64_t seed);
SimpleGraph SampleEr(int n, double p, Rng& rng);

// Correlated Erdos-Renyi pair: g1 ~ G(n, p), and for each pair {u, v} the
// indicator of {pi(u), pi(v)} in g2 is Bernoulli(p + rho (1 - p)) given an
// edge in g1 and Bernoulli(p (1 - rho)) otherwise. Throws DegenerateError for
// p in {0, 1} and ParameterError for p or rho outside [0, 1].
CorrelatedPair SampleCorrelatedPair(int n, double p, double rho, uint64_t seed);
CorrelatedPair SampleCorrelatedPair(int n, double p, double rho, Rng& rng);

// s distinct vertices uniformly without replacement; the induced graph is
// relabeled 0..s-1 in draw order.
InducedSample SampleInducedSubgraph(const SimpleGraph& g, int s, uint64_t seed);
InducedSample SampleInducedSubgraph(const SimpleGraph& g, int s, Rng& rng);

// |pi(V1) ∩ V2|.
int OverlapSize(const VertexSample& v1, const VertexSample& v2,
                const Permutation& pi);

}  // namespace corrdetect

#endif  // CORRDETECT_SAMPLING_H_
