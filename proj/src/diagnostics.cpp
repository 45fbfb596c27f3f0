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

#include "agraal/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "agraal/baselines.hpp"

namespace agraal {

bool CertificateReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CertificateEntry& e) { return e.passed; });
}

const CertificateEntry* CertificateReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

// Tracks the worst violation of a family of inequalities lhs <= rhs.
class Checker {
 public:
  explicit Checker(std::string name) { e_.name = std::move(name); }

  void le(double lhs, double rhs, std::size_t k) {
    ++e_.checked;
    const double v = lhs - rhs;
    if (v > 0.0 || std::isnan(v)) {
      e_.passed = false;
      const double mag = std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
      if (!e_.worst_k || mag > e_.worst_violation) {
        e_.worst_violation = mag;
        e_.worst_k = k;
      }
    }
  }

  // lhs < rhs; an equality counts as a violation of size 0.
  void lt(double lhs, double rhs, std::size_t k) {
    if (lhs < rhs) {
      le(lhs, rhs, k);
      return;
    }
    ++e_.checked;
    e_.passed = false;
    const double v = std::isnan(lhs - rhs) ? std::numeric_limits<double>::infinity() : lhs - rhs;
    if (!e_.worst_k || v > e_.worst_violation) {
      e_.worst_violation = v;
      e_.worst_k = k;
    }
  }

  CertificateEntry done(std::string note = {}) {
    e_.note = std::move(note);
    return std::move(e_);
  }

 private:
  CertificateEntry e_;
};

const IterateHistory& require_iterates(const Trace& t) {
  if (!t.iterates || t.iterates->x.size() != t.records.size()) throw MissingIterates();
  return *t.iterates;
}

}  // namespace

LyapunovSeries lyapunov_series(const Trace& trace, const Point& x_ref, const Objective& f,
                               const SolverParams& params, const CurvatureOptions& curvature) {
  const IterateHistory& it = require_iterates(trace);
  const std::size_t n = trace.records.size();
  LyapunovSeries s;
  if (n < 2) return s;

  std::vector<EvaluatedPoint> bar(n);
  std::vector<EvaluatedPoint> tilde(n);
  for (std::size_t k = 0; k < n; ++k) {
    bar[k] = EvaluatedPoint{it.x_bar[k], evaluate(f, it.x_bar[k])};
    tilde[k] = EvaluatedPoint{it.x_tilde[k], evaluate(f, it.x_tilde[k])};
  }
  const EvaluatedPoint ref{x_ref, evaluate(f, x_ref)};

  for (std::size_t k = 1; k < n; ++k) {
    const IterRecord& cur = trace.records[k];
    const IterRecord& prev = trace.records[k - 1];
    const ExtendedReal lam = local_curvature(bar[k], tilde[k - 1], tilde[k], curvature, &f);
    const double breg = bregman(bar[k - 1], tilde[k - 1], &f);

    const double distance = 0.5 * (it.x[k] - x_ref).squaredNorm();
    const double gap = prev.H * value_difference(bar[k], ref, &f);
    double bterm = 0.0;
    if (lam.is_finite()) {
      bterm = params.theta * cur.eta * prev.eta / lam.value() * breg;
    } else {
      s.worst_bregman_at_infinite_lambda =
          std::max(s.worst_bregman_at_infinite_lambda,
                   std::abs(breg) / (1.0 + std::abs(bar[k - 1].r.value)));
    }
    const double momentum = 0.5 * params.gamma * params.theta * (it.x[k] - it.x[k - 1]).squaredNorm();

    s.k.push_back(k);
    s.distance.push_back(distance);
    s.gap.push_back(gap);
    s.bregman.push_back(bterm);
    s.momentum.push_back(momentum);
    s.total.push_back(distance + gap + bterm + momentum);
    s.lambda.push_back(lam.value());
  }
  return s;
}

CertificateEntry check_monotone_psi(const LyapunovSeries& s) {
  Checker c("psi_monotone");
  if (s.total.size() < 2) return c.done("vacuous: fewer than two Lyapunov values");
  for (std::size_t i = 0; i + 1 < s.total.size(); ++i) {
    c.le(s.total[i + 1], s.total[i] * (1.0 + kCertRelTol) + kCertAbsTol, s.k[i + 1]);
  }
  return c.done();
}

CertificateEntry check_infinite_lambda_bregman(const LyapunovSeries& s) {
  Checker c("psi_infinite_lambda");
  // B_f is a difference of O(|f|) quantities, so rounding is ~eps |f|
  c.le(s.worst_bregman_at_infinite_lambda, 1e-12, 0);
  return c.done();
}

CertificateEntry check_corollary_bound(const Trace& trace, const Point& x_ref,
                                       const Objective& f, const SolverParams& params) {
  Checker c("corollary_bound");
  const IterateHistory& it = require_iterates(trace);
  const std::size_t K = trace.records.size() - 1;
  if (K == 0) return c.done("vacuous: K = 0");

  const OracleResult at0 = evaluate(f, it.x[0]);
  const EvaluatedPoint ref{x_ref, evaluate(f, x_ref)};
  const EvaluatedPoint bar{it.x_bar[K], evaluate(f, it.x_bar[K])};
  const double lhs = 0.5 * (it.x[K] - x_ref).squaredNorm() +
                     trace.records[K - 1].H * value_difference(bar, ref, &f);
  const double rhs = 0.5 * (it.x[0] - x_ref).squaredNorm() +
                     0.5 * (1.0 + params.gamma * params.theta) * params.eta0 * params.eta0 *
                         at0.gradient.squaredNorm();
  c.le(lhs, rhs * (1.0 + kCertRelTol) + kCertAbsTol, K);
  return c.done();
}

CertificateEntry check_h_envelope(const Trace& trace, const SolverParams& params, double L) {
  Checker c("h_envelope");
  const RateConstants rc = rate_constants(params, L);
  const double slope = rc.c / std::sqrt(L);
  for (const IterRecord& r : trace.records) {
    const double bound = slope * (static_cast<double>(r.k) - static_cast<double>(rc.m));
    c.le(bound - kCertAbsTol, std::sqrt(r.H), r.k);
  }
  return c.done("c = " + std::to_string(rc.c) + ", m = " + std::to_string(rc.m));
}

std::vector<CertificateEntry> check_lemmas(const Trace& trace, const SolverParams& params,
                                           std::optional<double> L, const Objective* f) {
  const auto& rs = trace.records;
  const double g = params.gamma;
  std::vector<CertificateEntry> out;

  {
    Checker c("alpha_beta_range");
    for (const IterRecord& r : rs) {
      if (!r.alpha || !r.beta) continue;
      c.le(*r.alpha, 1.0, r.k);
      c.le(*r.beta, 1.0, r.k);
      c.lt(0.0, *r.alpha, r.k);
      c.lt(0.0, *r.beta, r.k);
    }
    out.push_back(c.done());
  }
  {
    Checker c("alpha_beta_eta");
    for (const IterRecord& r : rs) {
      if (!r.alpha || !r.beta) continue;
      c.le(std::abs(r.eta - *r.alpha * *r.beta * r.H), kLemmaRelTol * r.eta, r.k);
    }
    out.push_back(c.done());
  }
  {
    Checker upd("H_update");
    Checker growth("H_growth");
    Checker eta("eta_growth");
    for (std::size_t i = 1; i < rs.size(); ++i) {
      const IterRecord& a = rs[i - 1];
      const IterRecord& b = rs[i];
      upd.le(std::abs(b.H - (a.H + b.eta)), kLemmaRelTol * b.H, b.k);
      growth.le(a.H, b.H, b.k);
      growth.le(b.H, (2.0 + g) * a.H * (1.0 + kLemmaRelTol), b.k);
      eta.le(b.eta, (1.0 + g) * a.eta * (1.0 + kLemmaRelTol), b.k);
    }
    out.push_back(upd.done());
    out.push_back(growth.done());
    out.push_back(eta.done());
  }
  {
    Checker c("lambda_lower_bound");
    if (L) {
      for (std::size_t i = 1; i < rs.size(); ++i) {
        if (!rs[i].lambda) continue;
        c.le(1.0 / *L - kLambdaAbsTol, *rs[i].lambda, rs[i].k);
      }
      out.push_back(c.done());
    } else {
      out.push_back(c.done("skipped: smoothness constant unknown"));
    }
  }
  {
    Checker c("beta_f_value");
    for (std::size_t k = 1; k + 1 < rs.size(); ++k) {
      if (!rs[k].beta) continue;
      const double fb = rs[k].f_bar;
      c.le(fb - rs[k].f_tilde, (fb - rs[k + 1].f_bar) / *rs[k].beta +
                                   kBetaFSlack * (1.0 + std::abs(fb)), k);
    }
    out.push_back(c.done());
  }
  {
    Checker c("beta_f_bregman");
    if (f == nullptr || !trace.iterates || trace.iterates->x.size() != rs.size()) {
      out.push_back(c.done("skipped: needs stored iterates and the objective"));
    } else {
      const IterateHistory& it = *trace.iterates;
      std::vector<EvaluatedPoint> bar(rs.size());
      std::vector<EvaluatedPoint> tilde(rs.size());
      for (std::size_t k = 0; k < rs.size(); ++k) {
        bar[k] = EvaluatedPoint{it.x_bar[k], evaluate(*f, it.x_bar[k])};
        tilde[k] = EvaluatedPoint{it.x_tilde[k], evaluate(*f, it.x_tilde[k])};
      }
      for (std::size_t k = 1; k + 1 < rs.size(); ++k) {
        c.le(bregman(bar[k], tilde[k - 1], f),
             bregman(bar[k - 1], tilde[k - 1], f) +
                 kBetaFSlack * (1.0 + std::abs(bar[k].r.value)),
             k);
      }
      out.push_back(c.done());
    }
  }
  return out;
}

RateFit fit_rate(const std::vector<double>& ks, const std::vector<double>& gaps) {
  if (ks.size() != gaps.size() || ks.size() < 2) {
    throw std::invalid_argument("rate fit needs at least two matching samples");
  }
  RateFit fit;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (!(gaps[i] > 0.0)) {
      fit.converged_at = static_cast<std::size_t>(ks[i]);
      return fit;
    }
    if (!(ks[i] > 0.0)) throw std::invalid_argument("rate fit needs k >= 1");
    const double x = std::log(ks[i]);
    const double y = std::log(gaps[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(ks.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

RateFit fit_rate(const Trace& trace, std::size_t k_lo, std::size_t k_hi,
                 const std::function<double(const IterRecord&)>& gap_fn) {
  if (k_lo < 1 || k_hi <= k_lo) throw std::invalid_argument("rate window must satisfy 1 <= k_lo < k_hi");
  if (k_hi >= trace.records.size()) throw std::invalid_argument("rate window exceeds trace length");
  std::vector<double> ks;
  std::vector<double> gaps;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    ks.push_back(static_cast<double>(trace.records[k].k));
    gaps.push_back(gap_fn(trace.records[k]));
  }
  return fit_rate(ks, gaps);
}

Point reference_minimizer(const Problem& problem, const Point& x0, double grad_tol,
                          std::size_t max_iters) {
  if (!problem.L) throw std::invalid_argument("reference minimiser needs L");
  BaselineMethod agd;
  agd.kind = BaselineKind::kAGD;
  agd.eta = 1.0 / *problem.L;
  StopRule stop;
  stop.max_iters = 500;
  stop.grad_tol = grad_tol;
  Point x = x0;
  for (std::size_t used = 0; used < max_iters; used += stop.max_iters) {
    const Trace t = run_baseline(agd, problem.f(), x, stop);
    x = t.solution;
    if (t.stop_reason == StopReason::kGradTol) break;
  }
  return x;
}

}  // namespace agraal
