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

#ifndef AGRAAL_ORACLE_HPP
#define AGRAAL_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace agraal {

using Point = Eigen::VectorXd;
using Index = Eigen::Index;

/// Value and gradient of the objective at one point.
struct OracleResult {
  double value = 0.0;
  Point gradient;
};

/// B_f(x; z) = f(x) - f(z) - <grad f(z), x - z> and grad f(x) - grad f(z).
struct ExactDifference {
  double bregman = 0.0;
  Point gradient_diff;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an oracle produces NaN/Inf at a finite query point.
class DefectiveOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A smooth convex objective f: R^d -> R with a combined value+gradient
/// oracle. Implementations are immutable after construction and may be
/// shared between concurrent runs.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual Index dim() const = 0;

  /// Unchecked evaluation; callers go through agraal::evaluate.
  virtual OracleResult value_and_gradient(const Point& x) const = 0;

  /// B_f(x; z) and grad f(x) - grad f(z), computed from x - z without
  /// cancellation, for objectives that know how. Callers fall back to the
  /// cached oracle values on nullopt.
  virtual std::optional<ExactDifference> exact_difference(const Point& x, const Point& z) const {
    (void)x;
    (void)z;
    return std::nullopt;
  }
};

/// Number of combined value+gradient calls made during one run.
class EvalCounter {
 public:
  void increment() { ++count_; }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

bool all_finite(const Point& x);

/// Checked oracle call. Validates dimension and finiteness of input and
/// output, and bumps `counter` by one when one is supplied.
OracleResult evaluate(const Objective& f, const Point& x,
                      EvalCounter* counter = nullptr);

/// Objective plus a per-run counter. Not shareable between runs.
class CountingOracle {
 public:
  explicit CountingOracle(const Objective& f) : f_(&f) {}

  OracleResult operator()(const Point& x) { return evaluate(*f_, x, &counter_); }

  const Objective& objective() const { return *f_; }
  Index dim() const { return f_->dim(); }
  std::uint64_t evaluations() const { return counter_.count(); }

 private:
  const Objective* f_;
  EvalCounter counter_;
};

/// Default central-difference step: 1e-5 * max(1, |x|_inf).
double default_fd_step(const Point& x);

/// Largest coordinate error between the central difference
/// (f(x+h e_i) - f(x-h e_i)) / 2h and the reported gradient, relative to
/// max(1, |grad f(x)|_inf). Evaluations are not counted.
double finite_diff_check(const Objective& f, const Point& x, double h);
double finite_diff_check(const Objective& f, const Point& x);

}  // namespace agraal

#endif  // AGRAAL_ORACLE_HPP
