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

#ifndef CORRDETECT_ROC_H_
#define CORRDETECT_ROC_H_

#include <utility>
#include <vector>

namespace corrdetect {

struct RocCurve {
  // (false positive rate, true positive rate) from (0, 0) to (1, 1), one
  // point per distinct pooled score in decreasing threshold order.
  std::vector<std::pair<double, double>> points;
  // Mann-Whitney estimate of P(H1 score > H0 score), ties counted 1/2.
  double auc;
};

// ParameterError on an empty list or a NaN score.
RocCurve RocAuc(const std::vector<double>& scores_h0, const std::vector<double>& scores_h1);

// Area under a piecewise-linear curve through `points`.
double TrapezoidArea(const std::vector<std::pair<double, double>>& points);

}  // namespace corrdetect

#endif  // CORRDETECT_ROC_H_
