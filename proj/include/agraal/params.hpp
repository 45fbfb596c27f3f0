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

#ifndef AGRAAL_PARAMS_HPP
#define AGRAAL_PARAMS_HPP

#include <optional>
#include <stdexcept>

namespace agraal {

/// (1 + sqrt 5) / 2. The feasible set of the parameter condition is empty
/// for theta at or below this value (a derived threshold).
inline constexpr double kGoldenRatio = 1.6180339887498948482;

class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters of the accelerated method. They must satisfy
///
///   4 nu theta (1 + gamma)^2 = gamma,
///   1 + 2 gamma + gamma t^2 <= t + t^2,   t = theta / (1 + theta).
///
/// Only theta and gamma are free; nu always comes from the equality.
struct SolverParams {
  double theta = 0.0;
  double gamma = 0.0;
  double nu = 0.0;
  double eta0 = 0.0;

  /// theta = 2, gamma = max_gamma(2) = 1/22, nu from the equality.
  static SolverParams defaults(double eta0);

  /// gamma defaults to max_gamma(theta); a supplied gamma must lie in
  /// (0, max_gamma(theta)]. Throws InfeasibleParams otherwise.
  static SolverParams from_theta(double theta, std::optional<double> gamma,
                                 double eta0);
};

/// Largest gamma with 1 + 2g + g t^2 <= t + t^2, i.e. (t + t^2 - 1)/(2 + t^2).
/// Throws InfeasibleParams when theta <= golden ratio.
double max_gamma(double theta);

/// gamma / (4 theta (1 + gamma)^2).
double nu_from(double theta, double gamma);

struct ParamReport {
  bool positive = false;
  /// |4 nu theta (1+gamma)^2 - gamma| / gamma
  double equality_residual = 0.0;
  bool equality_ok = false;
  /// RHS - LHS of the inequality; feasible when >= -1e-12.
  double inequality_slack = 0.0;
  bool inequality_ok = false;
  bool eta0_ok = false;

  bool passed() const { return positive && equality_ok && inequality_ok && eta0_ok; }
};

inline constexpr double kEqualityTol = 1e-12;
inline constexpr double kInequalityTol = 1e-12;

ParamReport validate(const SolverParams& p);

/// Constants of the lower bound sqrt(H_k) >= (c / sqrt(L)) (k - m).
struct RateConstants {
  double c = 0.0;
  long m = 0;
  double L_used = 0.0;
};

RateConstants rate_constants(const SolverParams& p, double L);

}  // namespace agraal

#endif  // AGRAAL_PARAMS_HPP
