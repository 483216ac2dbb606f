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

#include "corrdetect/low_degree.h"

#include <cmath>
#include <numbers>

#include "corrdetect/errors.h"
#include "corrdetect/motif_families.h"
#include "fmt/format.h"

namespace corrdetect {

SnrReport LowDegreeSnr(int n, int s, double rho, int D) {
  if (D < 0) throw ParameterError("degree budget D must be non-negative");
  if (D > 10) throw CapacityError(fmt::format("SNR enumeration supports D <= 10, got {}", D));
  if (s < 0 || s > n) throw ParameterError(fmt::format("need 0 <= s <= n, got s = {}, n = {}", s, n));
  if (!(rho >= 0.0 && rho <= 1.0)) throw ParameterError(fmt::format("rho = {} outside [0, 1]", rho));
  SnrReport report{D, 0.0, {}};
  double total = 0.0;
  for (const Motif& m : EnumerateSimpleNoIsolated(D / 2).members) {
    const int v = m.num_vertices();
    double term = 0.0;
    if (v <= s) {
      double log_ratio = 0.0;
      for (int i = 0; i < v; ++i) log_ratio += std::log(double(s - i)) - std::log(double(n - i));
      term = std::pow(rho, 2.0 * m.num_edges()) * std::exp(2.0 * log_ratio);
    }
    total += term;
    report.terms.push_back({m, term});
  }
  report.snr = std::sqrt(total);
  return report;
}

double SnrClosedFormBound(int n, int s, double rho, int D) {
  if (s <= 0 || s >= n)
    throw DegenerateError(fmt::format("closed-form bound needs 0 < s < n, got s = {}, n = {}", s, n));
  const double x = std::numbers::e * rho * D / (2.0 * std::log(static_cast<double>(n) / s));
  return std::sqrt(1.0 + x * x * std::exp(x * x));
}

}  // namespace corrdetect
