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

#ifndef CORRDETECT_LOW_DEGREE_H_
#define CORRDETECT_LOW_DEGREE_H_

#include <vector>

#include "corrdetect/motif.h"

namespace corrdetect {

struct SnrTerm {
  Motif motif;
  // rho^(2e) (s!(n-v)! / (n!(s-v)!))^2, or 0 when v > s.
  double contribution;
};

struct SnrReport {
  int D;
  double snr;
  std::vector<SnrTerm> terms;
};

// Square root of the class sum over simple graphs without isolated vertices
// and at most floor(D / 2) edges. CapacityError for D > 10.
SnrReport LowDegreeSnr(int n, int s, double rho, int D);

// sqrt(1 + x^2 exp(x^2)) with x = e rho D / (2 log(n / s)). DegenerateError
// when s >= n.
double SnrClosedFormBound(int n, int s, double rho, int D);

}  // namespace corrdetect

#endif  // CORRDETECT_LOW_DEGREE_H_
