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

#include "corrdetect/detect.h"

#include <algorithm>
#include <cmath>
#include <bit>
#include <functional>
#include <limits>

#include "corrdetect/errors.h"
#include "corrdetect/rng.h"
#include "fmt/format.h"

namespace corrdetect {
namespace {

double LogFalling(int n, int k) {
  double total = 0.0;
  for (int i = 0; i < k; ++i) total += std::log(static_cast<double>(n - i));
  return total;
}

double Choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

double WeightOmega(const Motif& m, const ModelParams& params, std::vector<std::string>* warnings) {
  if (m.num_vertices() > params.n)
    throw ParameterError(fmt::format("motif has {} vertices but n = {}", m.num_vertices(), params.n));
  if (!(params.p > 0.0 && params.p < 1.0))
    throw ParameterError(fmt::format("p = {} outside (0, 1)", params.p));
  if (params.rho == 0.0) {
    if (warnings) warnings->push_back("rho = 0: all motif weights vanish and the statistic is identically 0");
    return 0.0;
  }
  const int e = m.num_edges();
  const double log_omega = e * std::log(params.rho) - LogFalling(params.n, m.num_vertices()) -
                           e * std::log(params.p * (1.0 - params.p)) -
                           std::log(static_cast<double>(m.automorphism_count()));
  return std::exp(log_omega);
}

WeightedFamily MakeWeightedFamily(MotifFamily family, const ModelParams& params) {
  WeightedFamily wf{std::move(family), {}, params, params.Validate()};
  if (wf.family.empty()) throw ParameterError("motif family is empty");
  bool warned = false;
  for (const Motif& m : wf.family.members) {
    std::vector<std::string> local;
    wf.weights.push_back(WeightOmega(m, params, &local));
    if (!local.empty() && !warned) {
      wf.warnings.insert(wf.warnings.end(), local.begin(), local.end());
      warned = true;
    }
  }
  return wf;
}

MotifStatistic::MotifStatistic(WeightedFamily wf) : wf_(std::move(wf)), plan_(wf_.family) {
  if (wf_.family.empty()) throw ParameterError("motif family is empty");
}

std::vector<double> MotifStatistic::Counts(const CenteredGraph& g) const {
  if (g.p() != wf_.params.p)
    throw ParameterError(fmt::format("graph centered at p = {} but the family uses p = {}", g.p(),
                                     wf_.params.p));
  return plan_.Evaluate(g);
}

double MotifStatistic::Combine(const std::vector<double>& c1, const std::vector<double>& c2) const {
  if (c1.size() != wf_.weights.size() || c2.size() != wf_.weights.size())
    throw ParameterError("count vectors do not match the family");
  double total = 0.0;
  for (size_t k = 0; k < wf_.weights.size(); ++k) total += wf_.weights[k] * c1[k] * c2[k];
  return total;
}

double MotifStatistic::Evaluate(const CenteredGraph& g1, const CenteredGraph& g2) const {
  return Combine(Counts(g1), Counts(g2));
}

double ComputeMotifStatistic(const WeightedFamily& wf, const CenteredGraph& g1, const CenteredGraph& g2) {
  return MotifStatistic(wf).Evaluate(g1, g2);
}

double ExpectedSignal(const WeightedFamily& wf) {
  const ModelParams& q = wf.params;
  double total = 0.0;
  for (const Motif& m : wf.family.members) {
    const int v = m.num_vertices();
    if (v > q.s) continue;
    if (q.rho == 0.0) continue;
    const double log_ratio = LogFalling(q.s, v) - LogFalling(q.n, v);
    total += std::exp(2.0 * m.num_edges() * std::log(q.rho) + 2.0 * log_ratio);
  }
  return total;
}

double ThresholdTauPoly(const WeightedFamily& wf) {
  if (wf.params.rho == 0.0) throw DegenerateError("threshold is undefined for rho = 0");
  const double signal = ExpectedSignal(wf);
  if (!(signal > 0.0)) throw DegenerateError("expected signal is zero: every motif exceeds s vertices");
  return signal / 2.0;
}

std::string HypothesisName(Hypothesis h) { return h == Hypothesis::kH0 ? "H0" : "H1"; }

TestOutcome Decide(double stat, double tau) {
  return {stat, tau, stat >= tau ? Hypothesis::kH1 : Hypothesis::kH0};
}

int64_t IntersectionEdgeCount(const SimpleGraph& g1, const SimpleGraph& g2, const Injection& phi) {
  const auto& pairs = phi.pairs();
  int64_t count = 0;
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      if (g1.has_edge(pairs[i].first, pairs[j].first) && g2.has_edge(pairs[i].second, pairs[j].second))
        ++count;
  return count;
}

int64_t ItStatisticExhaustive(const SimpleGraph& g1, const SimpleGraph& g2, int m) {
  const int s1 = g1.num_vertices(), s2 = g2.num_vertices();
  if (m < 0 || m > std::min(s1, s2))
    throw ParameterError(fmt::format("m = {} outside [0, min({}, {})]", m, s1, s2));
  const double work = Choose(s1, m) * Choose(s2, m) * std::exp(std::lgamma(m + 1.0));
  if (work > 1e8 * (1 + 1e-9))
    throw CapacityError(fmt::format("exhaustive search over {:.3g} injections exceeds the 1e8 guard", work));
  if (m < 2) return 0;
  const int64_t ceiling = static_cast<int64_t>(m) * (m - 1) / 2;
  int64_t best = 0;
  std::vector<int> domain(m), image(m);
  std::vector<char> used(s2, 0);
  std::vector<int64_t> remaining(m + 1, 0);

  // remaining[i]: G1 edges inside the domain from position i onward to earlier
  // positions, an upper bound on what the positions i.. can still add.
  std::function<void(int, int64_t)> assign = [&](int i, int64_t current) {
    if (current + remaining[i] <= best) return;
    if (i == m) {
      best = current;
      return;
    }
    for (int y = 0; y < s2 && best < ceiling; ++y) {
      if (used[y]) continue;
      int64_t gained = 0;
      for (int j = 0; j < i; ++j)
        if (g1.has_edge(domain[i], domain[j]) && g2.has_edge(y, image[j])) ++gained;
      used[y] = 1;
      image[i] = y;
      assign(i + 1, current + gained);
      used[y] = 0;
    }
  };
  std::function<void(int, int)> choose = [&](int i, int start) {
    if (best == ceiling) return;
    if (i == m) {
      remaining[m] = 0;
      for (int k = m - 1; k >= 0; --k) {
        int64_t back = 0;
        for (int j = 0; j < k; ++j) back += g1.has_edge(domain[k], domain[j]);
        remaining[k] = remaining[k + 1] + back;
      }
      assign(0, 0);
      return;
    }
    for (int x = start; x <= s1 - (m - i); ++x) {
      domain[i] = x;
      choose(i + 1, x + 1);
    }
  };
  choose(0, 0);
  return best;
}

double ItThreshold(int m, double p, double gamma, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError(fmt::format("eps = {} outside (0, 1)", eps));
  return 0.5 * m * (m - 1) * p * p * (1.0 + gamma - eps * gamma);
}

int DefaultItM(int s, int n, double eps) {
  if (n <= 0) throw ParameterError("n must be positive");
  return static_cast<int>(std::floor((1.0 - eps) * s * static_cast<double>(s) / n));
}

LocalSearchResult ItStatisticLocalSearch(const SimpleGraph& g1, const SimpleGraph& g2, int m,
                                         uint64_t seed, int restarts, int iterations) {
  const int s1 = g1.num_vertices(), s2 = g2.num_vertices();
  if (m < 0 || m > std::min(s1, s2))
    throw ParameterError(fmt::format("m = {} outside [0, min({}, {})]", m, s1, s2));
  Rng rng(seed);
  auto score = [&](const std::vector<int>& d, const std::vector<int>& im) {
    int64_t c = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) c += g1.has_edge(d[i], d[j]) && g2.has_edge(im[i], im[j]);
    return c;
  };
  int64_t best_value = -1;
  std::vector<int> best_d, best_im;
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    std::vector<int> d = rng.SampleWithoutReplacement(s1, m);
    std::vector<int> im = rng.SampleWithoutReplacement(s2, m);
    int64_t cur = score(d, im);
    for (int it = 0; it < iterations && m > 0; ++it) {
      std::vector<int> nd = d, nim = im;
      const int k = static_cast<int>(rng.UniformBelow(m));
      const int move = static_cast<int>(rng.UniformBelow(3));
      if (move == 0 && m < s1) {
        int x;
        do x = static_cast<int>(rng.UniformBelow(s1));
        while (std::find(d.begin(), d.end(), x) != d.end());
        nd[k] = x;
      } else if (move == 1 && m < s2) {
        int y;
        do y = static_cast<int>(rng.UniformBelow(s2));
        while (std::find(im.begin(), im.end(), y) != im.end());
        nim[k] = y;
      } else if (m > 1) {
        std::swap(nim[k], nim[rng.UniformBelow(m)]);
      }
      const int64_t next = score(nd, nim);
      if (next >= cur) {
        cur = next;
        d = std::move(nd);
        im = std::move(nim);
      }
    }
    if (cur > best_value) {
      best_value = cur;
      best_d = d;
      best_im = im;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) pairs.emplace_back(best_d[i], best_im[i]);
  return {std::max<int64_t>(best_value, 0), Injection(std::move(pairs))};
}

AdmissibilityReport DiagnoseAdmissibility(const MotifFamily& family, const ModelParams& params) {
  params.Validate();
  AdmissibilityReport r{};
  r.all_connected = true;
  r.min_density_exponent = std::numeric_limits<double>::infinity();
  const double log_n = std::log(static_cast<double>(params.n));
  const double log_p = std::log(params.p);
  for (const Motif& m : family.members) {
    r.all_connected = r.all_connected && m.is_connected();
    r.max_size = std::max({r.max_size, m.num_vertices(), m.num_edges()});
    if (params.rho > 0.0) {
      r.signal_sum += std::pow(params.rho, 2.0 * m.num_edges()) *
                      std::pow(static_cast<double>(params.s) / params.n, 2.0 * m.num_vertices());
    }
    const int e = m.num_edges();
    if (e > 20) throw CapacityError("subgraph scan supports motifs with at most 20 edges");
    if (m.num_vertices() > 0) r.min_density_exponent = std::min(r.min_density_exponent, 1.0);
    for (uint32_t mask = 1; mask < (1u << e); ++mask) {
      uint64_t verts = 0;
      int edges = 0;
      for (int k = 0; k < e; ++k) {
        if (!(mask >> k & 1u)) continue;
        verts |= 1ULL << m.edges()[k].first | 1ULL << m.edges()[k].second;
        ++edges;
      }
      const double exponent = std::popcount(verts) + edges * log_p / log_n;
      r.min_density_exponent = std::min(r.min_density_exponent, exponent);
    }
  }
  const double log_ratio = std::log(params.n / (params.s * params.rho));
  r.size_scale_log = log_n / std::max(std::log(log_n), log_ratio);
  r.size_scale_sqrt = std::sqrt(static_cast<double>(params.s));
  r.signal_condition = r.signal_sum >= 800.0;
  r.chebyshev_bound = r.signal_sum > 0.0 ? 8.0 / r.signal_sum : std::numeric_limits<double>::infinity();
  r.density_condition = r.min_density_exponent > 0.0;
  return r;
}

}  // namespace corrdetect
