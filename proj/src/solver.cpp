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

#include "agraal/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace agraal {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(const Point& p, const char* name, std::size_t k) {
  if (!all_finite(p)) {
    throw Divergence(std::string("non-finite ") + name + " at iteration " +
                     std::to_string(k));
  }
}

IterRecord make_record(const IterState& s, std::uint64_t evals) {
  IterRecord r;
  r.k = s.k;
  r.eta = s.eta;
  r.H = s.H;
  r.alpha = s.alpha;
  r.beta = s.beta;
  if (s.lambda) r.lambda = s.lambda->value();
  r.f_bar = s.at_bar.value;
  r.f_tilde = s.at_tilde.value;
  r.grad_norm_tilde = s.at_tilde.gradient.norm();
  r.evals = evals;
  return r;
}

void push_iterates(IterateHistory& h, const IterState& s) {
  h.x.push_back(s.x);
  h.x_bar.push_back(s.x_bar);
  h.x_tilde.push_back(s.x_tilde);
}

}  // namespace

IterState init(const Point& x0, const SolverParams& params, CountingOracle& oracle) {
  const ParamReport rep = validate(params);
  if (!rep.passed()) {
    throw InfeasibleParams("solver parameters violate the feasibility condition "
                           "(equality residual " + std::to_string(rep.equality_residual) +
                           ", inequality slack " + std::to_string(rep.inequality_slack) + ")");
  }
  IterState s;
  s.k = 0;
  s.x = x0;
  s.x_prev = x0;
  s.x_bar = x0;
  s.x_tilde = x0;
  s.x_hat = x0;
  s.eta = params.eta0;
  s.eta_prev = params.eta0;
  s.H = params.eta0;
  s.H_prev = params.eta0;
  s.alpha = 1.0;
  s.beta = 1.0;
  s.at_tilde = oracle(x0);
  s.at_bar = s.at_tilde;
  s.bregman_bar_tilde = 0.0;
  return s;
}

IterState step(const IterState& s, CountingOracle& oracle, const SolverParams& params,
               const RunOptions& opts) {
  const double g = params.gamma;
  IterState n;
  n.k = s.k + 1;

  n.alpha = (1.0 + g) * s.eta / (s.H + (1.0 + g) * s.eta);

  n.x = s.x - s.eta * s.at_tilde.gradient;
  n.x_prev = s.x;
  n.x_bar = s.beta * s.x_tilde + (1.0 - s.beta) * s.x_bar;
  n.x_hat = n.x + params.theta * (n.x - s.x);
  n.x_tilde = n.alpha * n.x_hat + (1.0 - n.alpha) * n.x_bar;
  require_finite(n.x, "x", n.k);
  require_finite(n.x_bar, "x_bar", n.k);
  require_finite(n.x_tilde, "x_tilde", n.k);

  try {
    n.at_bar = oracle(n.x_bar);
    n.at_tilde = oracle(n.x_tilde);
  } catch (const DefectiveOracle& e) {
    throw Divergence(std::string(e.what()) + " at iteration " + std::to_string(n.k));
  }

  const EvaluatedPoint bar_next{n.x_bar, n.at_bar};
  const EvaluatedPoint tilde_cur{s.x_tilde, s.at_tilde};
  const EvaluatedPoint tilde_next{n.x_tilde, n.at_tilde};
  const ExtendedReal lambda = local_curvature(bar_next, tilde_cur, tilde_next, opts.curvature,
                                              &oracle.objective());
  n.lambda = lambda;

  double growth = 1.0 + g;
  if (opts.growth_cap && s.k >= 1) growth = 1.0 + 1.0 / static_cast<double>(s.k);
  double eta = growth * s.eta;
  if (lambda.is_finite()) {
    eta = std::min(eta, params.nu * s.H_prev * lambda.value() / s.eta_prev);
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw Divergence("stepsize " + std::to_string(eta) + " at iteration " +
                     std::to_string(n.k));
  }
  n.eta = eta;
  n.eta_prev = s.eta;
  n.H = s.H + eta;
  n.H_prev = s.H;

  double beta = eta / (n.alpha * n.H);
  // beta <= 1 holds analytically; absorb a rounding overshoot
  if (beta > 1.0 && beta <= 1.0 + 8.0 * kEps) beta = 1.0;
  n.beta = beta;

  n.bregman_bar_tilde = bregman(bar_next, tilde_next, &oracle.objective());
  return n;
}

Trace run(const Objective& f, const Point& x0, const SolverParams& params,
          const StopRule& stop, const RunOptions& opts) {
  stop.validate(opts.f_star);

  Trace trace;
  trace.method = opts.growth_cap ? "agraal_capped" : "agraal";
  trace.params = params;
  trace.problem = ProblemMeta{opts.problem_label, f.dim(), opts.L, opts.f_star};
  if (opts.store_iterates) trace.iterates.emplace();

  CountingOracle oracle(f);
  IterState s = init(x0, params, oracle);

  auto record = [&](const IterState& st) {
    trace.records.push_back(make_record(st, oracle.evaluations()));
    if (trace.iterates) push_iterates(*trace.iterates, st);
  };
  auto satisfied = [&](const IterState& st) -> std::optional<StopReason> {
    if (st.at_bar.gradient.norm() <= stop.grad_tol) return StopReason::kGradTol;
    if (stop.gap_tol && st.at_bar.value - *opts.f_star <= *stop.gap_tol) {
      return StopReason::kGapTol;
    }
    if (st.k >= stop.max_iters) return StopReason::kMaxIters;
    return std::nullopt;
  };

  record(s);
  trace.stop_reason = StopReason::kMaxIters;
  while (true) {
    if (auto reason = satisfied(s)) {
      trace.stop_reason = *reason;
      break;
    }
    try {
      s = step(s, oracle, params, opts);
    } catch (const Divergence& e) {
      trace.stop_reason = StopReason::kDiverged;
      trace.message = e.what();
      break;
    }
    record(s);
  }
  trace.solution = s.x_bar;
  return trace;
}

}  // namespace agraal
