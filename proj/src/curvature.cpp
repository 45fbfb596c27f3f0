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

#include "agraal/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace agraal {

ExtendedReal::ExtendedReal(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0) {
    throw std::invalid_argument("extended real must be >= 0 or +inf");
  }
}

namespace {

void check_pair(const EvaluatedPoint& x, const EvaluatedPoint& z) {
  if (x.x.size() != z.x.size() || x.r.gradient.size() != x.x.size() ||
      z.r.gradient.size() != z.x.size()) {
    throw DimensionMismatch("curvature pair has inconsistent dimensions");
  }
}

}  // namespace

namespace {

ExactDifference difference(const EvaluatedPoint& x, const EvaluatedPoint& z, const Objective* f) {
  check_pair(x, z);
  if (f) {
    if (auto d = f->exact_difference(x.x, z.x)) return std::move(*d);
  }
  return ExactDifference{x.r.value - z.r.value - z.r.gradient.dot(x.x - z.x),
                         x.r.gradient - z.r.gradient};
}

bool negligible(const Point& dg, const OracleResult& a, const OracleResult& b, double guard) {
  const double scale =
      std::max({1.0, a.gradient.squaredNorm(), b.gradient.squaredNorm()});
  return dg.squaredNorm() <= guard * scale;
}

}  // namespace

double bregman(const EvaluatedPoint& x, const EvaluatedPoint& z, const Objective* f) {
  return difference(x, z, f).bregman;
}

double value_difference(const EvaluatedPoint& x, const EvaluatedPoint& z, const Objective* f) {
  check_pair(x, z);
  if (f) {
    if (const auto d = f->exact_difference(x.x, z.x)) {
      return d->bregman + z.r.gradient.dot(x.x - z.x);
    }
  }
  return x.r.value - z.r.value;
}

bool gradients_coincide(const OracleResult& a, const OracleResult& b, double guard) {
  return negligible(a.gradient - b.gradient, a, b, guard);
}

ExtendedReal lambda_option1(const EvaluatedPoint& x, const EvaluatedPoint& z,
                            const CurvatureOptions& opts, const Objective* f) {
  const ExactDifference d = difference(x, z, f);
  if (negligible(d.gradient_diff, x.r, z.r, opts.guard)) return ExtendedReal::infinity();
  return ExtendedReal((x.x - z.x).norm() / d.gradient_diff.norm());
}

ExtendedReal lambda_option2(const EvaluatedPoint& x, const EvaluatedPoint& z,
                            const CurvatureOptions& opts, const Objective* f) {
  const ExactDifference d = difference(x, z, f);
  if (negligible(d.gradient_diff, x.r, z.r, opts.guard)) return ExtendedReal::infinity();
  const double b = d.bregman;
  const double scale = 1.0 + std::abs(x.r.value) + std::abs(z.r.value);
  if (opts.strict && b < -opts.convexity_tol * scale) {
    throw NonconvexOracle("negative Bregman divergence " + std::to_string(b) +
                          " exceeds convexity tolerance");
  }
  const double lam = 2.0 * std::max(b, 0.0) / d.gradient_diff.squaredNorm();
  if (lam > 0.0) return ExtendedReal(lam);
  if (opts.strict) {
    throw NonconvexOracle("zero curvature estimate with distinct gradients");
  }
  return ExtendedReal((x.x - z.x).norm() / d.gradient_diff.norm());
}

ExtendedReal local_curvature(const EvaluatedPoint& x_bar_next,
                             const EvaluatedPoint& x_tilde_cur,
                             const EvaluatedPoint& x_tilde_next,
                             const CurvatureOptions& opts, const Objective* f) {
  return min(lambda_option2(x_bar_next, x_tilde_cur, opts, f),
             lambda_option2(x_bar_next, x_tilde_next, opts, f));
}

}  // namespace agraal
