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

#ifndef CORRDETECT_DETECT_H_
#define CORRDETECT_DETECT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corrdetect/graph.h"
#include "corrdetect/hom.h"
#include "corrdetect/motif_families.h"

namespace corrdetect {

// omega_M = rho^e (n - v)! / (n! (p (1 - p))^e aut(M)), evaluated in log
// space. rho = 0 gives 0 and appends a warning if `warnings` is non-null.
double WeightOmega(const Motif& m, const ModelParams& params,
                   std::vector<std::string>* warnings = nullptr);

struct WeightedFamily {
  MotifFamily family;
  std::vector<double> weights;
  ModelParams params;
  std::vector<std::string> warnings;
};

// Validates params and computes every weight. ParameterError on an empty
// family or a motif with more than n vertices.
WeightedFamily MakeWeightedFamily(MotifFamily family, const ModelParams& params);

// T = sum_M omega_M inj(M, g1) inj(M, g2). Holds the quotient plan so
// repeated evaluations share the canonicalization work.
class MotifStatistic {
 public:
  explicit MotifStatistic(WeightedFamily wf);

  const WeightedFamily& weighted_family() const { return wf_; }
  // Per-motif injective counts. ParameterError if g is centered at a p other
  // than the family's.
  std::vector<double> Counts(const CenteredGraph& g) const;
  double Combine(const std::vector<double>& counts1, const std::vector<double>& counts2) const;
  double Evaluate(const CenteredGraph& g1, const CenteredGraph& g2) const;

 private:
  WeightedFamily wf_;
  InjectivePlan plan_;
};

double ComputeMotifStatistic(const WeightedFamily& wf, const CenteredGraph& g1,
                             const CenteredGraph& g2);

// E_P1[T] = Var_P0[T] = sum_M rho^(2e) (s!(n-v)! / (n!(s-v)!))^2, with 0 for
// motifs having more than s vertices.
double ExpectedSignal(const WeightedFamily& wf);

// Half the expected signal. DegenerateError when rho = 0.
double ThresholdTauPoly(const WeightedFamily& wf);

enum class Hypothesis { kH0, kH1 };
std::string HypothesisName(Hypothesis h);

struct TestOutcome {
  double statistic;
  double threshold;
  Hypothesis decision;
};

// H1 iff stat >= tau.
TestOutcome Decide(double stat, double tau);

// Edges of g1 inside domain(phi) whose images are edges of g2.
int64_t IntersectionEdgeCount(const SimpleGraph& g1, const SimpleGraph& g2, const Injection& phi);

// max over injections phi from an m-subset of V(g1) into V(g2) of the
// intersection edge count. CapacityError when C(s1,m) C(s2,m) m! > 1e8.
int64_t ItStatisticExhaustive(const SimpleGraph& g1, const SimpleGraph& g2, int m);

// C(m, 2) p^2 (1 + gamma - eps gamma). ParameterError unless eps in (0, 1).
double ItThreshold(int m, double p, double gamma, double eps = 0.1);

// floor((1 - eps) s^2 / n).
int DefaultItM(int s, int n, double eps = 0.1);

struct LocalSearchResult {
  // Intersection count of `phi`. Only a lower bound on the exhaustive value.
  int64_t value;
  Injection phi;
};

// Heuristic: random restarts of hill climbing over injections of size m
// (moves replace a domain vertex, replace an image, or swap two images).
LocalSearchResult ItStatisticLocalSearch(const SimpleGraph& g1, const SimpleGraph& g2, int m,
                                         uint64_t seed, int restarts = 8, int iterations = 2000);

struct AdmissibilityReport {
  // Condition 1: all members connected.
  bool all_connected;
  // Condition 2 inputs: largest v or e in the family, and the finite
  // quantities log n / max(log log n, log(n / (s rho))) and sqrt(s).
  int max_size;
  double size_scale_log;
  double size_scale_sqrt;
  // Condition 3: sum_M rho^(2e) (s/n)^(2v) and whether it reaches 800.
  double signal_sum;
  bool signal_condition;
  // 8 / signal_sum, the Chebyshev error bound scale.
  double chebyshev_bound;
  // Condition 4: min over members and nonempty subgraphs of
  // v' + e' log p / log n; the condition holds with eps0 below this value.
  double min_density_exponent;
  bool density_condition;
};

// CapacityError if a member has more than 20 edges.
AdmissibilityReport DiagnoseAdmissibility(const MotifFamily& family, const ModelParams& params);

}  // namespace corrdetect

#endif  // CORRDETECT_DETECT_H_
