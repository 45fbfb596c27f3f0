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

#ifndef AGRAAL_CURVATURE_HPP
#define AGRAAL_CURVATURE_HPP

#include <limits>
#include <stdexcept>

#include "agraal/oracle.hpp"

namespace agraal {

/// A value in [0, +inf].
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  explicit ExtendedReal(double v);

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  constexpr bool is_infinite() const {
    return v_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const { return !is_infinite(); }

  /// The raw value, +inf included.
  constexpr double value() const { return v_; }

  friend constexpr ExtendedReal min(ExtendedReal a, ExtendedReal b) {
    return a.v_ <= b.v_ ? a : b;
  }
  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) = default;

 private:
  double v_ = 0.0;
};

/// A point together with its cached oracle result.
struct EvaluatedPoint {
  Point x;
  OracleResult r;
};

class NonconvexOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurvatureOptions {
  /// Gradients are treated as equal when the squared difference is at most
  /// guard * max(1, |g_x|^2, |g_z|^2).
  double guard = 1e2 * std::numeric_limits<double>::epsilon() *
                 std::numeric_limits<double>::epsilon();
  /// Strict mode raises on materially negative Bregman values and on a
  /// zero estimate; lenient mode falls back to the secant (Option I) ratio.
  bool strict = false;
  double convexity_tol = 1e-10;
};

/// B_f(x; z) = f(x) - f(z) - <grad f(z), x - z>. When `f` is given and
/// offers Objective::exact_difference, that value is used instead, and the
/// same holds for the gradient difference in the estimates below.
double bregman(const EvaluatedPoint& x, const EvaluatedPoint& z, const Objective* f = nullptr);

/// f(x) - f(z), evaluated as B_f(x; z) + <grad f(z), x - z> when `f`
/// offers Objective::exact_difference and as a plain difference otherwise.
double value_difference(const EvaluatedPoint& x, const EvaluatedPoint& z,
                        const Objective* f = nullptr);

/// True when the two gradients are indistinguishable under `guard`.
bool gradients_coincide(const OracleResult& a, const OracleResult& b, double guard);

/// Secant estimate |x - z| / |grad f(x) - grad f(z)|.
ExtendedReal lambda_option1(const EvaluatedPoint& x, const EvaluatedPoint& z,
                            const CurvatureOptions& opts = {}, const Objective* f = nullptr);

/// Bregman estimate 2 B_f(x; z) / |grad f(x) - grad f(z)|^2, +inf when the
/// gradients coincide.
ExtendedReal lambda_option2(const EvaluatedPoint& x, const EvaluatedPoint& z,
                            const CurvatureOptions& opts = {}, const Objective* f = nullptr);

/// min{Lambda(x_bar_next; x_tilde_cur), Lambda(x_bar_next; x_tilde_next)}.
ExtendedReal local_curvature(const EvaluatedPoint& x_bar_next,
                             const EvaluatedPoint& x_tilde_cur,
                             const EvaluatedPoint& x_tilde_next,
                             const CurvatureOptions& opts = {},
                             const Objective* f = nullptr);

}  // namespace agraal

#endif  // AGRAAL_CURVATURE_HPP
