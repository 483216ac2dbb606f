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

#include "corrdetect/roc.h"

#include <algorithm>
#include <cmath>

#include "corrdetect/errors.h"

namespace corrdetect {

RocCurve RocAuc(const std::vector<double>& scores_h0, const std::vector<double>& scores_h1) {
  if (scores_h0.empty() || scores_h1.empty()) throw ParameterError("ROC needs scores under both hypotheses");
  for (const auto* list : {&scores_h0, &scores_h1})
    for (double x : *list)
      if (std::isnan(x)) throw ParameterError("ROC scores may not be NaN");
  std::vector<double> h0 = scores_h0, h1 = scores_h1;
  std::sort(h0.begin(), h0.end(), std::greater<>());
  std::sort(h1.begin(), h1.end(), std::greater<>());
  const double n0 = static_cast<double>(h0.size()), n1 = static_cast<double>(h1.size());

  RocCurve curve{{{0.0, 0.0}}, 0.0};
  size_t i0 = 0, i1 = 0;
  double wins = 0.0;
  while (i0 < h0.size() || i1 < h1.size()) {
    const double t = std::max(i0 < h0.size() ? h0[i0] : -INFINITY, i1 < h1.size() ? h1[i1] : -INFINITY);
    size_t tied0 = 0, tied1 = 0;
    while (i0 < h0.size() && h0[i0] == t) ++i0, ++tied0;
    while (i1 < h1.size() && h1[i1] == t) ++i1, ++tied1;
    // Each H1 score at t beats every H0 score below t and ties those at t.
    wins += tied1 * ((h0.size() - i0) + 0.5 * tied0);
    curve.points.emplace_back(i0 / n0, i1 / n1);
  }
  curve.auc = wins / (n0 * n1);
  return curve;
}

double TrapezoidArea(const std::vector<std::pair<double, double>>& points) {
  double area = 0.0;
  for (size_t k = 1; k < points.size(); ++k)
    area += (points[k].first - points[k - 1].first) * (points[k].second + points[k - 1].second) / 2.0;
  return area;
}

}  // namespace corrdetect
