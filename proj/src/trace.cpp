// Copyright 2026 The agraal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agraal/trace.hpp"

#include <cmath>
#include <stdexcept>

namespace agraal {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::kMaxIters: return "max_iters";
    case StopReason::kGradTol: return "grad_tol";
    case StopReason::kGapTol: return "gap_tol";
    case StopReason::kStationary: return "stationary";
    case StopReason::kDiverged: return "diverged";
  }
  return "unknown";
}

void StopRule::validate(std::optional<double> f_star) const {
  if (!(grad_tol >= 0.0) || std::isnan(grad_tol)) {
    throw std::invalid_argument("grad_tol must be nonnegative");
  }
  if (gap_tol) {
    if (!(*gap_tol >= 0.0)) throw std::invalid_argument("gap_tol must be nonnegative");
    if (!f_star) throw std::invalid_argument("gap_tol requires a known optimal value");
  }
}

}  // namespace agraal
