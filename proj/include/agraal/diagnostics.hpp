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

#ifndef AGRAAL_DIAGNOSTICS_HPP
#define AGRAAL_DIAGNOSTICS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agraal/curvature.hpp"
#include "agraal/oracle.hpp"
#include "agraal/params.hpp"
#include "agraal/problems.hpp"
#include "agraal/trace.hpp"

namespace agraal {

// Certificate tolerances. The certified inequalities are exact in real
// arithmetic; these only absorb double rounding.
inline constexpr double kCertRelTol = 1e-10;
inline constexpr double kCertAbsTol = 1e-12;
inline constexpr double kLemmaRelTol = 1e-12;
inline constexpr double kLambdaAbsTol = 1e-9;
inline constexpr double kBetaFSlack = 1e-9;

struct CertificateEntry {
  std::string name;
  bool passed = true;
  /// Largest amount by which the inequality failed (0 when it held).
  double worst_violation = 0.0;
  std::optional<std::size_t> worst_k;
  std::size_t checked = 0;
  std::string note;
};

struct CertificateReport {
  std::vector<CertificateEntry> entries;

  bool passed() const;
  const CertificateEntry* find(const std::string& name) const;
  void add(CertificateEntry e) { entries.push_back(std::move(e)); }
};

class MissingIterates : public std::invalid_argument {
 public:
  MissingIterates() : std::invalid_argument("store_iterates required: trace has no iterate vectors") {}
};

/// Psi_k(x) = 1/2 |x_k - x|^2 + H_{k-1} (f(x_bar_k) - f(x))
///          + (theta eta_k eta_{k-1} / lambda_k) B_f(x_bar_{k-1}; x_tilde_{k-1})
///          + (gamma theta / 2) |x_k - x_{k-1}|^2,   k = 1..K.
struct LyapunovSeries {
  std::vector<std::size_t> k;
  std::vector<double> total;
  std::vector<double> distance;
  std::vector<double> gap;
  std::vector<double> bregman;
  std::vector<double> momentum;
  /// Recomputed lambda_k (+inf allowed).
  std::vector<double> lambda;
  /// Largest |B_f(x_bar_{k-1}; x_tilde_{k-1})| seen where lambda_k = +inf,
  /// relative to 1 + |f(x_bar_{k-1})|. The Bregman term is set to 0 there.
  double worst_bregman_at_infinite_lambda = 0.0;
};

/// Recomputes every value from the stored iterates with fresh, uncounted
/// oracle calls. Throws MissingIterates when the trace has no vectors.
LyapunovSeries lyapunov_series(const Trace& trace, const Point& x_ref, const Objective& f,
                               const SolverParams& params,
                               const CurvatureOptions& curvature = {});

/// Psi_{k+1} <= Psi_k (1 + 1e-10) + 1e-12 for all k.
CertificateEntry check_monotone_psi(const LyapunovSeries& series);

/// Where lambda_k = +inf the Bregman term is defined as 0; this asserts the
/// dropped divergence was itself zero up to rounding.
CertificateEntry check_infinite_lambda_bregman(const LyapunovSeries& series);

/// 1/2 |x_K - x|^2 + H_{K-1} (f(x_bar_K) - f(x))
///   <= 1/2 |x_0 - x|^2 + (1 + gamma theta) eta_0^2 / 2 |grad f(x_0)|^2.
CertificateEntry check_corollary_bound(const Trace& trace, const Point& x_ref,
                                       const Objective& f, const SolverParams& params);

/// sqrt(H_k) >= (c / sqrt(L)) (k - m) - 1e-12 with (c, m) from rate_constants.
CertificateEntry check_h_envelope(const Trace& trace, const SolverParams& params, double L);

/// Scalar invariants of the accelerated method plus, when iterates and an
/// objective are given, the Bregman monotonicity along the coupling step.
/// Entries: alpha_beta_range, alpha_beta_eta, H_update, H_growth,
/// eta_growth, lambda_lower_bound (needs L), beta_f_value, beta_f_bregman.
std::vector<CertificateEntry> check_lemmas(const Trace& trace, const SolverParams& params,
                                           std::optional<double> L,
                                           const Objective* f = nullptr);

struct RateFit {
  std::optional<double> slope;
  /// Set when a gap in the window was <= 0 (already converged).
  std::optional<std::size_t> converged_at;
};

/// Least-squares slope of log(gap) against log(k) over k in [k_lo, k_hi].
RateFit fit_rate(const std::vector<double>& ks, const std::vector<double>& gaps);
RateFit fit_rate(const Trace& trace, std::size_t k_lo, std::size_t k_hi,
                 const std::function<double(const IterRecord&)>& gap_fn);

/// Approximate minimiser from restarted AGD with stepsize 1/L. Used as a
/// reference point where x* has no closed form.
Point reference_minimizer(const Problem& problem, const Point& x0, double grad_tol = 1e-10,
                          std::size_t max_iters = 200000);

}  // namespace agraal

#endif  // AGRAAL_DIAGNOSTICS_HPP
