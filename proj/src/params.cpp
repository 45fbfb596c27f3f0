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

#include "agraal/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace agraal {

double max_gamma(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("theta must be positive and finite");
  }
  const double t = theta / (1.0 + theta);
  const double num = t + t * t - 1.0;
  if (!(num > 0.0)) {
    throw InfeasibleParams("theta = " + std::to_string(theta) +
                           " admits no gamma > 0; theta must exceed the golden "
                           "ratio (1+sqrt 5)/2 = 1.6180339887");
  }
  return num / (2.0 + t * t);
}

double nu_from(double theta, double gamma) {
  if (!(theta > 0.0) || !(gamma > 0.0)) {
    throw std::invalid_argument("theta and gamma must be positive");
  }
  return gamma / (4.0 * theta * (1.0 + gamma) * (1.0 + gamma));
}

SolverParams SolverParams::defaults(double eta0) {
  return from_theta(2.0, std::nullopt, eta0);
}

SolverParams SolverParams::from_theta(double theta, std::optional<double> gamma,
                                      double eta0) {
  const double g_max = max_gamma(theta);
  double g = g_max;
  if (gamma) {
    if (!(*gamma > 0.0) || *gamma > g_max) {
      throw InfeasibleParams("gamma = " + std::to_string(*gamma) +
                             " outside (0, " + std::to_string(g_max) + "] for theta = " +
                             std::to_string(theta));
    }
    g = *gamma;
  }
  if (!(eta0 > 0.0) || !std::isfinite(eta0)) {
    throw std::invalid_argument("eta0 must be positive and finite");
  }
  return SolverParams{theta, g, nu_from(theta, g), eta0};
}

ParamReport validate(const SolverParams& p) {
  ParamReport rep;
  rep.positive = p.theta > 0.0 && p.gamma > 0.0 && p.nu > 0.0;
  rep.eta0_ok = p.eta0 > 0.0 && std::isfinite(p.eta0);
  if (!rep.positive) return rep;

  const double g1 = 1.0 + p.gamma;
  rep.equality_residual = std::abs(4.0 * p.nu * p.theta * g1 * g1 - p.gamma) / p.gamma;
  rep.equality_ok = rep.equality_residual <= kEqualityTol;

  const double t = p.theta / (1.0 + p.theta);
  const double lhs = 1.0 + 2.0 * p.gamma + p.gamma * t * t;
  const double rhs = t + t * t;
  rep.inequality_slack = rhs - lhs;
  rep.inequality_ok = rep.inequality_slack >= -kInequalityTol;
  return rep;
}

RateConstants rate_constants(const SolverParams& p, double L) {
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw std::invalid_argument("smoothness constant L must be positive");
  }
  if (!(p.gamma > 0.0) || !(p.nu > 0.0) || !(p.eta0 > 0.0)) {
    throw std::invalid_argument("rate constants need positive gamma, nu, eta0");
  }
  const double g = p.gamma;
  const double sqrt_nu = std::sqrt(p.nu);
  const double first = sqrt_nu / (3.0 * (2.0 + g));
  const double second =
      sqrt_nu * g / (16.0 * std::pow(g * std::pow(1.0 + g, 5) * std::pow(2.0 + g, 3), 0.25));
  const double c = std::min(first, second);
  const double log_term = std::log(4.0 * c * c / (g * p.eta0 * L)) / std::log1p(g);
  const double m = std::ceil(std::max(2.0, log_term));
  return RateConstants{c, static_cast<long>(m), L};
}

}  // namespace agraal
