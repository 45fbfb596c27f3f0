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

#ifndef AGRAAL_PROBLEMS_HPP
#define AGRAAL_PROBLEMS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "agraal/libsvm.hpp"
#include "agraal/oracle.hpp"
#include "agraal/trace.hpp"

namespace agraal {

/// An objective with whatever is known about it.
struct Problem {
  std::shared_ptr<const Objective> objective;
  /// Smoothness constant (exact or a certified upper bound).
  std::optional<double> L;
  std::optional<double> f_star;
  std::optional<Point> x_star;
  std::string label;

  const Objective& f() const { return *objective; }
  Index dim() const { return objective->dim(); }
  ProblemMeta meta() const { return ProblemMeta{label, dim(), L, f_star}; }
};

/// f(x) = 1/2 x'Ax - b'x with A symmetric positive definite.
class QuadraticObjective final : public Objective {
 public:
  QuadraticObjective(Eigen::MatrixXd A, Point b);

  Index dim() const override { return b_.size(); }
  OracleResult value_and_gradient(const Point& x) const override;
  std::optional<ExactDifference> exact_difference(const Point& x,
                                                  const Point& z) const override;

  const Eigen::MatrixXd& A() const { return A_; }
  const Point& b() const { return b_; }

 private:
  Eigen::MatrixXd A_;
  Point b_;
};

/// f(w) = (1/n) sum log(1 + exp(-y_i <a_i, w>)) + (reg/2) |w|^2.
class LogisticObjective final : public Objective {
 public:
  using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

  LogisticObjective(const SparseDataset& data, double reg);

  Index dim() const override { return A_.cols(); }
  OracleResult value_and_gradient(const Point& w) const override;
  std::optional<ExactDifference> exact_difference(const Point& x,
                                                  const Point& z) const override;

  const SparseMatrix& design() const { return A_; }
  double reg() const { return reg_; }

 private:
  SparseMatrix A_;
  Eigen::VectorXd y_;
  double reg_;
};

/// f(x) = mu log sum_i exp((<a_i, x> - b_i) / mu), evaluated with the
/// max-shifted exponent.
class LogSumExpObjective final : public Objective {
 public:
  LogSumExpObjective(Eigen::MatrixXd A, Eigen::VectorXd b, double mu);

  Index dim() const override { return A_.cols(); }
  OracleResult value_and_gradient(const Point& x) const override;
  std::optional<ExactDifference> exact_difference(const Point& x,
                                                  const Point& z) const override;

  const Eigen::MatrixXd& A() const { return A_; }

 private:
  Eigen::MatrixXd A_;
  Eigen::VectorXd b_;
  double mu_;
};

/// Quadratic with eigenvalues log-spaced over [1, cond] (both ends exact)
/// in a seeded random orthogonal basis. L = cond; x* and f* are exact up
/// to the linear solve.
Problem make_quadratic(std::uint64_t seed, Index dim, double cond);

/// f(x) = (scale/2) |x|^2, so x* = 0, f* = 0, L = scale.
Problem isotropic_quadratic(Index dim, double scale = 1.0);

/// f(x) = 1/2 sum_i d_i x_i^2 - b'x.
Problem diagonal_quadratic(const Point& diag, const Point& b);

/// L = |A'A|_2 / (4n) + reg, with the spectral norm from power iteration.
/// f* and x* are not known in closed form.
Problem logistic_problem(const SparseDataset& data, double reg);

/// Seeded instance: Gaussian a_i re-centred to mean zero (so the minimum
/// is attained) and Gaussian offsets. L = max_i |a_i|^2 / mu.
Problem logsumexp_problem(std::uint64_t seed, Index dim, Index n_terms, double smoothing);
Problem logsumexp_problem(Eigen::MatrixXd A, Eigen::VectorXd b, double smoothing);

struct PowerIterationResult {
  double eigenvalue = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Largest eigenvalue of a symmetric positive semidefinite operator.
/// Stops when the Rayleigh quotient changes by at most tol relative.
PowerIterationResult power_iteration(const std::function<Point(const Point&)>& apply,
                                     Index dim, double tol = 1e-10,
                                     int max_iters = 10000, std::uint64_t seed = 0);

}  // namespace agraal

#endif  // AGRAAL_PROBLEMS_HPP
