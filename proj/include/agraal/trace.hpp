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

#ifndef AGRAAL_TRACE_HPP
#define AGRAAL_TRACE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agraal/oracle.hpp"
#include "agraal/params.hpp"

namespace agraal {

/// Scalars recorded for one iterate. Fields a method does not define stay
/// empty. `lambda` is empty when undefined and +inf when the curvature
/// estimate is infinite.
struct IterRecord {
  std::size_t k = 0;
  double eta = 0.0;
  double H = 0.0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> lambda;
  /// f at the reported point (x_bar for the accelerated method).
  double f_bar = 0.0;
  /// f at the gradient query point.
  double f_tilde = 0.0;
  double grad_norm_tilde = 0.0;
  std::uint64_t evals = 0;
  /// Set when a stepsize rule had to fall back (e.g. undefined BB step).
  bool flagged = false;
};

/// Iterate vectors per record: x_k, x_bar_k, x_tilde_k.
struct IterateHistory {
  std::vector<Point> x;
  std::vector<Point> x_bar;
  std::vector<Point> x_tilde;
};

struct ProblemMeta {
  std::string label;
  Index dim = 0;
  std::optional<double> L;
  std::optional<double> f_star;
};

enum class StopReason { kMaxIters, kGradTol, kGapTol, kStationary, kDiverged };

const char* to_string(StopReason r);

struct StopRule {
  std::size_t max_iters = 1000;
  /// Stop once |grad f(x_bar_k)| <= grad_tol.
  double grad_tol = 0.0;
  /// Stop once f(x_bar_k) - f* <= gap_tol; needs a known f*.
  std::optional<double> gap_tol;

  void validate(std::optional<double> f_star) const;
};

struct Trace {
  std::string method;
  std::vector<IterRecord> records;
  std::optional<IterateHistory> iterates;
  std::optional<SolverParams> params;
  ProblemMeta problem;
  /// Reported solution (x_bar_K for the accelerated method).
  Point solution;
  StopReason stop_reason = StopReason::kMaxIters;
  /// Diagnostic message for divergence.
  std::string message;

  bool diverged() const { return stop_reason == StopReason::kDiverged; }
  std::size_t iterations() const { return records.empty() ? 0 : records.size() - 1; }
  std::uint64_t evaluations() const { return records.empty() ? 0 : records.back().evals; }
};

}  // namespace agraal

#endif  // AGRAAL_TRACE_HPP
