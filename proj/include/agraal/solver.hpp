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

#ifndef AGRAAL_SOLVER_HPP
#define AGRAAL_SOLVER_HPP

#include <optional>
#include <stdexcept>

#include "agraal/curvature.hpp"
#include "agraal/oracle.hpp"
#include "agraal/params.hpp"
#include "agraal/trace.hpp"

namespace agraal {

/// Accelerated GRAAL.
///
/// Each iteration takes a gradient step on x from the extrapolation point
/// x_tilde, moves the output point x_bar towards x_tilde by the coupling
/// weight beta, extrapolates x_hat = x + theta (x - x_prev) and mixes it
/// with x_bar to get the next x_tilde. The stepsize grows by at most a
/// factor (1 + gamma) per step and is otherwise set from the local
/// inverse-curvature estimate lambda. alpha is chosen before eta is known
/// and beta afterwards, so that eta_k = alpha_k beta_k H_k with
/// H_k = eta_0 + ... + eta_k.
///
/// Per iteration the oracle is called exactly twice, at x_bar_{k+1} and
/// x_tilde_{k+1}; the result at x_tilde_k is carried over.
struct IterState {
  std::size_t k = 0;
  Point x;
  Point x_prev;
  Point x_bar;
  Point x_tilde;
  Point x_hat;
  double eta = 0.0;
  double eta_prev = 0.0;
  double H = 0.0;
  double H_prev = 0.0;
  double alpha = 1.0;
  double beta = 1.0;
  /// Empty at k = 0.
  std::optional<ExtendedReal> lambda;
  OracleResult at_tilde;
  OracleResult at_bar;
  /// B_f(x_bar_k; x_tilde_k), the Bregman term of the next Lyapunov value.
  double bregman_bar_tilde = 0.0;
};

class Divergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  bool store_iterates = false;
  /// Replace the (1 + gamma) growth bound by (1 + 1/k) for k >= 1.
  bool growth_cap = false;
  /// Needed only by a gap_tol stop rule.
  std::optional<double> f_star;
  CurvatureOptions curvature;
  std::string problem_label;
  std::optional<double> L;
};

/// k = 0 state; one oracle evaluation at x0. Throws on invalid params.
IterState init(const Point& x0, const SolverParams& params, CountingOracle& oracle);

/// One iteration. Throws Divergence on a non-finite iterate or stepsize.
IterState step(const IterState& s, CountingOracle& oracle, const SolverParams& params,
               const RunOptions& opts = {});

Trace run(const Objective& f, const Point& x0, const SolverParams& params,
          const StopRule& stop, const RunOptions& opts = {});

}  // namespace agraal

#endif  // AGRAAL_SOLVER_HPP
