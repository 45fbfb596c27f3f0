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

#include "agraal/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace agraal {

bool all_finite(const Point& x) { return x.allFinite(); }

OracleResult evaluate(const Objective& f, const Point& x, EvalCounter* counter) {
  if (x.size() != f.dim()) {
    throw DimensionMismatch("oracle expects dimension " + std::to_string(f.dim()) +
                            ", got " + std::to_string(x.size()));
  }
  if (!all_finite(x)) {
    throw std::invalid_argument("oracle query point has non-finite entries");
  }
  OracleResult r = f.value_and_gradient(x);
  if (counter != nullptr) counter->increment();
  if (r.gradient.size() != x.size()) {
    throw DefectiveOracle("oracle returned gradient of dimension " +
                          std::to_string(r.gradient.size()));
  }
  if (!std::isfinite(r.value) || !all_finite(r.gradient)) {
    throw DefectiveOracle("oracle returned non-finite value or gradient");
  }
  return r;
}

double default_fd_step(const Point& x) {
  return 1e-5 * std::max(1.0, x.lpNorm<Eigen::Infinity>());
}

double finite_diff_check(const Objective& f, const Point& x, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("finite difference step must be positive");
  }
  const OracleResult r = evaluate(f, x);
  const double scale = std::max(1.0, r.gradient.lpNorm<Eigen::Infinity>());
  double worst = 0.0;
  Point probe = x;
  for (Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = evaluate(f, probe).value;
    probe[i] = x[i] - h;
    const double fm = evaluate(f, probe).value;
    probe[i] = x[i];
    // actual spacing, since x[i] +- h is rounded
    const double fd = (fp - fm) / ((x[i] + h) - (x[i] - h));
    worst = std::max(worst, std::abs(fd - r.gradient[i]) / scale);
  }
  return worst;
}

double finite_diff_check(const Objective& f, const Point& x) {
  return finite_diff_check(f, x, default_fd_step(x));
}

}  // namespace agraal
