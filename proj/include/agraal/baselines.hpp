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

#ifndef AGRAAL_BASELINES_HPP
#define AGRAAL_BASELINES_HPP

#include <optional>
#include <string>

#include "agraal/curvature.hpp"
#include "agraal/oracle.hpp"
#include "agraal/trace.hpp"

namespace agraal {

enum class BaselineKind { kGD, kAGD, kAdGD, kAdaGradNorm, kBB, kPolyak };

const char* to_string(BaselineKind k);
/// Accepts "gd", "agd", "adgd", "adagrad", "bb", "polyak".
BaselineKind baseline_from_string(const std::string& name);

/// Comparison method and its hyperparameters.
///
///   GD, AGD       eta (typically 1/L)
///   AdaGrad-norm  eta is the scale
///   AdGD          eta0, gamma, nu; lambda from Option I unless option2 is set
///   BB            eta0 for the first step and fallbacks
///   Polyak        f_star
struct BaselineMethod {
  BaselineKind kind = BaselineKind::kGD;
  std::optional<double> eta;
  std::optional<double> eta0;
  /// AdGD defaults follow the original method (sqrt(1 + eta_k/eta_{k-1})
  /// growth, half the secant estimate); they are not normative.
  double gamma = 1.0;
  double nu = 0.5;
  bool adgd_option2 = false;
  std::optional<double> f_star;

  /// Throws std::invalid_argument when a required hyperparameter is missing.
  void validate() const;
};

struct BaselineOptions {
  bool store_iterates = false;
  /// Used for gap_tol stopping; Polyak reads BaselineMethod::f_star.
  std::optional<double> f_star;
  CurvatureOptions curvature;
  std::string problem_label;
  std::optional<double> L;
};

/// Runs the method. Records carry the same schema as the accelerated
/// solver: eta is the step used from the record's iterate, H the running
/// sum of steps, f_bar and f_tilde the value at the iterate (AGD: f_tilde
/// at the gradient point). Values needed only for monitoring are not
/// counted as oracle calls.
Trace run_baseline(const BaselineMethod& method, const Objective& f, const Point& x0,
                   const StopRule& stop, const BaselineOptions& opts = {});

/// min{eta sqrt(1 + gamma eta / eta_prev), nu lambda}.
double adgd_stepsize(double eta, double eta_prev, ExtendedReal lambda, double gamma,
                     double nu);

/// eta_scale / sqrt(sq_grad_sum); 0 when the sum is 0.
double adagrad_stepsize(double eta_scale, double sq_grad_sum);

/// <dx, dg> / |dg|^2, or nullopt when |dg|^2 is below the guard or the
/// ratio is not positive.
std::optional<double> bb_stepsize(const Point& dx, const Point& dg,
                                  double guard = CurvatureOptions{}.guard);

/// (f(x) - f*) / |grad f(x)|^2; 0 at a stationary point.
double polyak_stepsize(double f_value, double f_star, const Point& grad);

}  // namespace agraal

#endif  // AGRAAL_BASELINES_HPP
