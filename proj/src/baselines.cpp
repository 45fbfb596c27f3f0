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

#include "agraal/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agraal {

const char* to_string(BaselineKind k) {
  switch (k) {
    case BaselineKind::kGD: return "gd";
    case BaselineKind::kAGD: return "agd";
    case BaselineKind::kAdGD: return "adgd";
    case BaselineKind::kAdaGradNorm: return "adagrad";
    case BaselineKind::kBB: return "bb";
    case BaselineKind::kPolyak: return "polyak";
  }
  return "unknown";
}

BaselineKind baseline_from_string(const std::string& name) {
  for (BaselineKind k : {BaselineKind::kGD, BaselineKind::kAGD, BaselineKind::kAdGD,
                         BaselineKind::kAdaGradNorm, BaselineKind::kBB,
                         BaselineKind::kPolyak}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown baseline method '" + name + "'");
}

void BaselineMethod::validate() const {
  auto positive = [](const std::optional<double>& v) {
    return v && *v > 0.0 && std::isfinite(*v);
  };
  switch (kind) {
    case BaselineKind::kGD:
    case BaselineKind::kAGD:
    case BaselineKind::kAdaGradNorm:
      if (!positive(eta)) {
        throw std::invalid_argument(std::string(to_string(kind)) + " requires eta > 0");
      }
      break;
    case BaselineKind::kAdGD:
      if (!positive(eta0)) throw std::invalid_argument("adgd requires eta0 > 0");
      if (!(gamma > 0.0) || !(nu > 0.0)) {
        throw std::invalid_argument("adgd requires gamma > 0 and nu > 0");
      }
      break;
    case BaselineKind::kBB:
      if (!positive(eta0)) throw std::invalid_argument("bb requires eta0 > 0");
      break;
    case BaselineKind::kPolyak:
      if (!f_star || !std::isfinite(*f_star)) {
        throw std::invalid_argument("polyak requires f_star");
      }
      break;
  }
}

double adgd_stepsize(double eta, double eta_prev, ExtendedReal lambda, double gamma,
                     double nu) {
  if (!(eta > 0.0) || !(eta_prev > 0.0)) {
    throw std::invalid_argument("adgd stepsizes must be positive");
  }
  const double grown = eta * std::sqrt(1.0 + gamma * eta / eta_prev);
  if (lambda.is_infinite()) return grown;
  return std::min(grown, nu * lambda.value());
}

double adagrad_stepsize(double eta_scale, double sq_grad_sum) {
  if (sq_grad_sum < 0.0) throw std::invalid_argument("negative gradient sum");
  if (sq_grad_sum == 0.0) return 0.0;
  return eta_scale / std::sqrt(sq_grad_sum);
}

std::optional<double> bb_stepsize(const Point& dx, const Point& dg, double guard) {
  if (dx.size() != dg.size()) throw DimensionMismatch("bb: dx and dg sizes differ");
  const double dg2 = dg.squaredNorm();
  if (!(dg2 > guard)) return std::nullopt;
  const double eta = dx.dot(dg) / dg2;
  if (!(eta > 0.0) || !std::isfinite(eta)) return std::nullopt;
  return eta;
}

double polyak_stepsize(double f_value, double f_star, const Point& grad) {
  const double g2 = grad.squaredNorm();
  if (g2 == 0.0) return 0.0;
  return (f_value - f_star) / g2;
}

namespace {

struct Recorder {
  Trace& trace;
  const StopRule& stop;
  std::optional<double> f_star;

  void push(IterRecord r, const Point& x, const Point& x_bar, const Point& x_tilde) {
    trace.records.push_back(r);
    if (trace.iterates) {
      trace.iterates->x.push_back(x);
      trace.iterates->x_bar.push_back(x_bar);
      trace.iterates->x_tilde.push_back(x_tilde);
    }
  }

  std::optional<StopReason> satisfied(std::size_t k, double f_bar, double grad_norm_bar) const {
    if (grad_norm_bar <= stop.grad_tol) return StopReason::kGradTol;
    if (stop.gap_tol && f_bar - *f_star <= *stop.gap_tol) return StopReason::kGapTol;
    if (k >= stop.max_iters) return StopReason::kMaxIters;
    return std::nullopt;
  }
};

Trace run_agd(const BaselineMethod& m, const Objective& f, const Point& x0,
              const StopRule& stop, Trace trace, std::optional<double> f_star) {
  CountingOracle oracle(f);
  Recorder rec{trace, stop, f_star};
  const double eta = *m.eta;
  Point v = x0;
  Point x_bar = x0;
  double H = 0.0;
  for (std::size_t k = 0;; ++k) {
    const double alpha = 2.0 / (static_cast<double>(k) + 2.0);
    const Point y = alpha * v + (1.0 - alpha) * x_bar;
    if (!all_finite(y)) {
      trace.stop_reason = StopReason::kDiverged;
      trace.message = "non-finite AGD iterate at iteration " + std::to_string(k);
      break;
    }
    OracleResult at_bar;
    OracleResult at_y;
    try {
      at_bar = evaluate(f, x_bar);  // monitoring only
      at_y = oracle(y);
    } catch (const DefectiveOracle& e) {
      trace.stop_reason = StopReason::kDiverged;
      trace.message = e.what();
      break;
    }
    H += eta;
    IterRecord r;
    r.k = k;
    r.eta = eta;
    r.H = H;
    r.alpha = alpha;
    r.f_bar = at_bar.value;
    r.f_tilde = at_y.value;
    r.grad_norm_tilde = at_y.gradient.norm();
    r.evals = oracle.evaluations();
    rec.push(r, v, x_bar, y);
    if (auto reason = rec.satisfied(k, at_bar.value, at_bar.gradient.norm())) {
      trace.stop_reason = *reason;
      break;
    }
    v -= (eta / alpha) * at_y.gradient;
    x_bar = alpha * v + (1.0 - alpha) * x_bar;
  }
  trace.solution = x_bar;
  return trace;
}

}  // namespace

Trace run_baseline(const BaselineMethod& m, const Objective& f, const Point& x0,
                   const StopRule& stop, const BaselineOptions& opts) {
  m.validate();
  stop.validate(opts.f_star);
  if (x0.size() != f.dim()) throw DimensionMismatch("x0 dimension does not match problem");

  Trace trace;
  trace.method = to_string(m.kind);
  trace.problem = ProblemMeta{opts.problem_label, f.dim(), opts.L, opts.f_star};
  if (opts.store_iterates) trace.iterates.emplace();

  if (m.kind == BaselineKind::kAGD) {
    return run_agd(m, f, x0, stop, std::move(trace), opts.f_star);
  }

  CountingOracle oracle(f);
  Recorder rec{trace, stop, opts.f_star};
  Point x = x0;
  OracleResult r = oracle(x);
  double sq_sum = r.gradient.squaredNorm();

  double eta = 0.0;
  double eta_prev = 0.0;
  switch (m.kind) {
    case BaselineKind::kGD: eta = *m.eta; break;
    case BaselineKind::kAdaGradNorm: eta = adagrad_stepsize(*m.eta, sq_sum); break;
    case BaselineKind::kAdGD:
    case BaselineKind::kBB: eta = *m.eta0; break;
    case BaselineKind::kPolyak: eta = polyak_stepsize(r.value, *m.f_star, r.gradient); break;
    case BaselineKind::kAGD: break;
  }
  eta_prev = eta;

  double H = 0.0;
  std::optional<double> lambda;
  bool flagged = false;
  for (std::size_t k = 0;; ++k) {
    H += eta;
    IterRecord ir;
    ir.k = k;
    ir.eta = eta;
    ir.H = H;
    ir.lambda = lambda;
    ir.f_bar = r.value;
    ir.f_tilde = r.value;
    ir.grad_norm_tilde = r.gradient.norm();
    ir.evals = oracle.evaluations();
    ir.flagged = flagged;
    rec.push(ir, x, x, x);
    if (auto reason = rec.satisfied(k, r.value, ir.grad_norm_tilde)) {
      trace.stop_reason = *reason;
      break;
    }
    if (!(eta > 0.0)) {
      // AdaGrad with an all-zero gradient history, or Polyak at f = f*
      trace.stop_reason = StopReason::kStationary;
      break;
    }

    Point x_next = x - eta * r.gradient;
    if (!all_finite(x_next)) {
      trace.stop_reason = StopReason::kDiverged;
      trace.message = "non-finite iterate at iteration " + std::to_string(k + 1);
      break;
    }
    OracleResult r_next;
    try {
      r_next = oracle(x_next);
    } catch (const DefectiveOracle& e) {
      trace.stop_reason = StopReason::kDiverged;
      trace.message = e.what();
      break;
    }

    double eta_next = eta;
    flagged = false;
    lambda.reset();
    switch (m.kind) {
      case BaselineKind::kGD: break;
      case BaselineKind::kAdaGradNorm:
        sq_sum += r_next.gradient.squaredNorm();
        eta_next = adagrad_stepsize(*m.eta, sq_sum);
        break;
      case BaselineKind::kAdGD: {
        const EvaluatedPoint a{x_next, r_next};
        const EvaluatedPoint b{x, r};
        const ExtendedReal lam = m.adgd_option2 ? lambda_option2(a, b, opts.curvature, &f)
                                                : lambda_option1(a, b, opts.curvature, &f);
        lambda = lam.value();
        eta_next = adgd_stepsize(eta, eta_prev, lam, m.gamma, m.nu);
        break;
      }
      case BaselineKind::kBB: {
        const auto bb = bb_stepsize(x_next - x, r_next.gradient - r.gradient,
                                    opts.curvature.guard);
        if (bb) {
          eta_next = *bb;
        } else {
          flagged = true;
        }
        break;
      }
      case BaselineKind::kPolyak:
        eta_next = polyak_stepsize(r_next.value, *m.f_star, r_next.gradient);
        break;
      case BaselineKind::kAGD: break;
    }
    eta_prev = eta;
    eta = eta_next;
    x = std::move(x_next);
    r = std::move(r_next);
  }
  trace.solution = x;
  return trace;
}

}  // namespace agraal
