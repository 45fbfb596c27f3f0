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

#include "agraal/problems.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace agraal {

namespace {

Eigen::MatrixXd gaussian_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd M(rows, cols);
  // column-major fill order is part of the seeded contract
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) M(i, j) = normal(rng);
  return M;
}

// log(1 + exp(t)) without overflow.
double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

// 1 / (1 + exp(-t))
double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

// expm1(t) - t, accurate for small |t|.
double expm1_minus_id(double t) {
  if (std::abs(t) >= 0.1) return std::expm1(t) - t;
  double term = 0.5 * t * t;
  double sum = term;
  for (int n = 3; n <= 14; ++n) {
    term *= t / n;
    sum += term;
  }
  return sum;
}

// For a probability vector p and shifts d: returns
// log sum_i p_i exp(d_i) - sum_i p_i d_i, and sets dp to the change of
// the tilted distribution p_i exp(d_i) / sum_j p_j exp(d_j) - p_i. The
// p-mean of d is removed first so every summand of the log is
// nonnegative. Returns nullopt when the shifts are too large for exp.
std::optional<double> tilt(const Eigen::VectorXd& p, const Eigen::VectorXd& d,
                           Eigen::VectorXd& dp) {
  const double mean = p.dot(d);
  const Eigen::VectorXd eps = d.array() - mean;
  if (eps.maxCoeff() > 50.0) return std::nullopt;
  double w = 0.0;
  for (Index i = 0; i < p.size(); ++i) w += p[i] * expm1_minus_id(eps[i]);
  dp.resize(p.size());
  for (Index i = 0; i < p.size(); ++i) dp[i] = p[i] * (std::expm1(eps[i]) - w) / (1.0 + w);
  return std::log1p(w);
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

QuadraticObjective::QuadraticObjective(Eigen::MatrixXd A, Point b)
    : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() != A_.cols() || A_.rows() != b_.size() || b_.size() < 1) {
    throw DimensionMismatch("quadratic needs a square A matching b");
  }
}

OracleResult QuadraticObjective::value_and_gradient(const Point& x) const {
  Point Ax = A_ * x;
  OracleResult r;
  r.value = 0.5 * x.dot(Ax) - b_.dot(x);
  r.gradient = Ax - b_;
  return r;
}

std::optional<ExactDifference> QuadraticObjective::exact_difference(const Point& x,
                                                                   const Point& z) const {
  const Point d = x - z;
  ExactDifference r;
  r.gradient_diff = A_ * d;
  r.bregman = 0.5 * d.dot(r.gradient_diff);
  return r;
}

LogisticObjective::LogisticObjective(const SparseDataset& data, double reg) : reg_(reg) {
  if (data.n_samples() == 0) throw std::invalid_argument("logistic problem needs samples");
  if (!(reg >= 0.0)) throw std::invalid_argument("regularisation must be nonnegative");
  data.validate();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(data.nnz());
  for (std::size_t i = 0; i < data.n_samples(); ++i) {
    for (const auto& [idx, val] : data.rows[i]) {
      triplets.emplace_back(static_cast<int>(i), idx - 1, val);
    }
  }
  A_.resize(static_cast<Index>(data.n_samples()), data.n_features);
  A_.setFromTriplets(triplets.begin(), triplets.end());
  y_.resize(static_cast<Index>(data.n_samples()));
  for (std::size_t i = 0; i < data.n_samples(); ++i) y_[static_cast<Index>(i)] = data.labels[i];
}

OracleResult LogisticObjective::value_and_gradient(const Point& w) const {
  const Index n = A_.rows();
  const Eigen::VectorXd margins = A_ * w;
  Eigen::VectorXd dl(n);
  double loss = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double z = y_[i] * margins[i];
    loss += softplus(-z);
    dl[i] = -y_[i] * sigmoid(-z);
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  OracleResult r;
  r.value = loss * inv_n + 0.5 * reg_ * w.squaredNorm();
  r.gradient = inv_n * (A_.transpose() * dl) + reg_ * w;
  return r;
}

std::optional<ExactDifference> LogisticObjective::exact_difference(const Point& x,
                                                                  const Point& z) const {
  const Point d = x - z;
  const Eigen::VectorXd mz = A_ * z;
  const Eigen::VectorXd md = A_ * d;
  const Index n = A_.rows();
  Eigen::VectorXd p(2), shift(2), dp(2), dl(n);
  double total = 0.0;
  for (Index i = 0; i < n; ++i) {
    // loss softplus(u) with u = -y <a, w>; u moves from v by delta
    const double v = -y_[i] * mz[i];
    const double delta = -y_[i] * md[i];
    p << sigmoid(-v), sigmoid(v);
    shift << 0.0, delta;
    if (const auto b = tilt(p, shift, dp)) {
      total += *b;
      dl[i] = -y_[i] * dp[1];
    } else {
      total += softplus(v + delta) - softplus(v) - sigmoid(v) * delta;
      dl[i] = -y_[i] * (sigmoid(v + delta) - sigmoid(v));
    }
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  ExactDifference r;
  r.bregman = total * inv_n + 0.5 * reg_ * d.squaredNorm();
  r.gradient_diff = inv_n * (A_.transpose() * dl) + reg_ * d;
  return r;
}

LogSumExpObjective::LogSumExpObjective(Eigen::MatrixXd A, Eigen::VectorXd b, double mu)
    : A_(std::move(A)), b_(std::move(b)), mu_(mu) {
  if (A_.rows() != b_.size() || A_.rows() < 2 || A_.cols() < 1) {
    throw DimensionMismatch("log-sum-exp needs >= 2 terms with matching offsets");
  }
  if (!(mu_ > 0.0)) throw std::invalid_argument("smoothing must be positive");
}

OracleResult LogSumExpObjective::value_and_gradient(const Point& x) const {
  const Eigen::VectorXd s = (A_ * x - b_) / mu_;
  const double shift = s.maxCoeff();
  const Eigen::VectorXd e = (s.array() - shift).exp().matrix();
  const double total = e.sum();
  OracleResult r;
  r.value = mu_ * (shift + std::log(total));
  r.gradient = A_.transpose() * (e / total);
  return r;
}

std::optional<ExactDifference> LogSumExpObjective::exact_difference(const Point& x,
                                                                   const Point& z) const {
  const Eigen::VectorXd s = (A_ * z - b_) / mu_;
  const Eigen::VectorXd e = (s.array() - s.maxCoeff()).exp().matrix();
  const Eigen::VectorXd p = e / e.sum();
  Eigen::VectorXd dp;
  const auto b = tilt(p, A_ * (x - z) / mu_, dp);
  if (!b) return std::nullopt;
  ExactDifference r;
  r.bregman = mu_ * *b;
  r.gradient_diff = A_.transpose() * dp;
  return r;
}

Problem make_quadratic(std::uint64_t seed, Index dim, double cond) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(cond >= 1.0) || !std::isfinite(cond)) {
    throw std::invalid_argument("condition number must be >= 1");
  }
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXd G = gaussian_matrix(rng, dim, dim);
  const Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(G).householderQ();

  Eigen::VectorXd eig(dim);
  if (dim == 1) {
    eig[0] = cond;
  } else {
    for (Index i = 0; i < dim; ++i) {
      eig[i] = std::pow(cond, static_cast<double>(i) / static_cast<double>(dim - 1));
    }
    eig[0] = 1.0;
    eig[dim - 1] = cond;
  }
  Eigen::MatrixXd A = Q * eig.asDiagonal() * Q.transpose();
  A = 0.5 * (A + A.transpose()).eval();

  std::normal_distribution<double> normal;
  Point b(dim);
  for (Index i = 0; i < dim; ++i) b[i] = normal(rng);

  const Eigen::LLT<Eigen::MatrixXd> llt(A);
  Point x_star = llt.solve(b);
  x_star += llt.solve(b - A * x_star);

  Problem p;
  auto obj = std::make_shared<QuadraticObjective>(std::move(A), b);
  p.f_star = obj->value_and_gradient(x_star).value;
  p.objective = std::move(obj);
  p.L = cond;
  p.x_star = std::move(x_star);
  p.label = "quadratic(d=" + std::to_string(dim) + ",cond=" + fmt_double(cond) +
            ",seed=" + std::to_string(seed) + ")";
  return p;
}

Problem isotropic_quadratic(Index dim, double scale) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  Problem p;
  p.objective = std::make_shared<QuadraticObjective>(
      Eigen::MatrixXd::Identity(dim, dim) * scale, Point::Zero(dim));
  p.L = scale;
  p.f_star = 0.0;
  p.x_star = Point::Zero(dim);
  p.label = "isotropic(d=" + std::to_string(dim) + ",scale=" + fmt_double(scale) + ")";
  return p;
}

Problem diagonal_quadratic(const Point& diag, const Point& b) {
  if (diag.size() != b.size() || diag.size() < 1) {
    throw DimensionMismatch("diagonal and offset sizes differ");
  }
  if (!(diag.array() > 0.0).all()) throw std::invalid_argument("diagonal must be positive");
  Problem p;
  Point x_star = b.cwiseQuotient(diag);
  auto obj = std::make_shared<QuadraticObjective>(Eigen::MatrixXd(diag.asDiagonal()), b);
  p.f_star = obj->value_and_gradient(x_star).value;
  p.objective = std::move(obj);
  p.L = diag.maxCoeff();
  p.x_star = std::move(x_star);
  p.label = "diagonal(d=" + std::to_string(diag.size()) + ")";
  return p;
}

Problem logistic_problem(const SparseDataset& data, double reg) {
  auto obj = std::make_shared<LogisticObjective>(data, reg);
  const auto& A = obj->design();
  const PowerIterationResult gram = power_iteration(
      [&A](const Point& v) -> Point { return A.transpose() * (A * v); }, A.cols());
  Problem p;
  p.L = gram.eigenvalue / (4.0 * static_cast<double>(A.rows())) + reg;
  p.objective = std::move(obj);
  p.label = "logistic(n=" + std::to_string(data.n_samples()) +
            ",d=" + std::to_string(data.n_features) + ",reg=" + fmt_double(reg) + ")";
  return p;
}

Problem logsumexp_problem(Eigen::MatrixXd A, Eigen::VectorXd b, double smoothing) {
  const double max_row = A.rowwise().squaredNorm().maxCoeff();
  Problem p;
  p.L = max_row / smoothing;
  p.label = "logsumexp(d=" + std::to_string(A.cols()) + ",m=" + std::to_string(A.rows()) +
            ",mu=" + fmt_double(smoothing) + ")";
  p.objective = std::make_shared<LogSumExpObjective>(std::move(A), std::move(b), smoothing);
  return p;
}

Problem logsumexp_problem(std::uint64_t seed, Index dim, Index n_terms, double smoothing) {
  if (n_terms < 2) throw std::invalid_argument("log-sum-exp needs at least 2 terms");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd A = gaussian_matrix(rng, n_terms, dim);
  const Eigen::RowVectorXd mean = A.colwise().mean();
  A.rowwise() -= mean;
  std::normal_distribution<double> normal;
  Eigen::VectorXd b(n_terms);
  for (Index i = 0; i < n_terms; ++i) b[i] = normal(rng);
  Problem p = logsumexp_problem(std::move(A), std::move(b), smoothing);
  p.label += ",seed=" + std::to_string(seed);
  return p;
}

PowerIterationResult power_iteration(const std::function<Point(const Point&)>& apply,
                                     Index dim, double tol, int max_iters,
                                     std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("power iteration needs dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Point v(dim);
  for (Index i = 0; i < dim; ++i) v[i] = normal(rng);
  v.normalize();

  PowerIterationResult res;
  double prev = 0.0;
  for (int it = 1; it <= max_iters; ++it) {
    Point w = apply(v);
    const double rq = v.dot(w);
    const double nw = w.norm();
    res.eigenvalue = rq;
    res.iterations = it;
    if (nw == 0.0) {
      res.converged = true;
      break;
    }
    if (it > 1 && std::abs(rq - prev) <= tol * std::abs(rq)) {
      res.converged = true;
      break;
    }
    prev = rq;
    v = w / nw;
  }
  return res;
}

}  // namespace agraal
