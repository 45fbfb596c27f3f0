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


#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "agraal/libsvm.hpp"
#include "agraal/problems.hpp"

using namespace agraal;

namespace {

Point gaussian(std::mt19937_64& rng, Index n, double scale = 1.0) {
  std::normal_distribution<double> normal;
  Point x(n);
  for (Index i = 0; i < n; ++i) x[i] = scale * normal(rng);
  return x;
}

}  // namespace

TEST_CASE("libsvm lines") {
  std::istringstream in("1 1:0.5 3:2.0\n-1 2:1e-3\n# comment only\n\n0 1:1 # trailing\n+1 4:7\n");
  const SparseDataset d = parse_libsvm(in);
  REQUIRE(d.n_samples() == 4);
  CHECK(d.labels[0] == 1);
  CHECK(d.rows[0].size() == 2);
  CHECK(d.rows[0][0] == SparseDataset::Entry{1, 0.5});
  CHECK(d.rows[0][1] == SparseDataset::Entry{3, 2.0});
  CHECK(d.labels[1] == -1);
  CHECK(d.rows[1][0] == SparseDataset::Entry{2, 1e-3});
  CHECK(d.labels[2] == -1);
  CHECK(d.labels[3] == 1);
  CHECK(d.n_features == 4);
}

TEST_CASE("libsvm errors carry the line number") {
  std::istringstream bad_order("1 3:1 2:1\n");
  try {
    parse_libsvm(bad_order);
    FAIL("expected a parse error");
  } catch (const LibsvmParseError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("nonincreasing") != std::string::npos);
  }
  std::istringstream bad_label("1 1:1\n2 1:1\n");
  try {
    parse_libsvm(bad_label);
    FAIL("expected a parse error");
  } catch (const LibsvmParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream bad_value("1 1:abc\n");
  CHECK_THROWS_AS(parse_libsvm(bad_value), LibsvmParseError);
  std::istringstream bad_index("1 0:1\n");
  CHECK_THROWS_AS(parse_libsvm(bad_index), LibsvmParseError);
}

TEST_CASE("libsvm round-trip is exact") {
  const SparseDataset d = make_classification(9, 30, 12, 0.4, 0.1);
  std::stringstream buf;
  write_libsvm(buf, d);
  const SparseDataset e = parse_libsvm(buf, d.n_features);
  CHECK(e.rows == d.rows);
  CHECK(e.labels == d.labels);
  CHECK(e.n_features == d.n_features);
}

TEST_CASE("quadratic instances") {
  const Problem one = make_quadratic(3, 6, 1.0);
  const auto& A = dynamic_cast<const QuadraticObjective&>(one.f()).A();
  CHECK((A - Eigen::MatrixXd::Identity(6, 6)).norm() <= 1e-12);
  CHECK(*one.L == 1.0);

  const Problem a = make_quadratic(7, 40, 1e3);
  const Problem b = make_quadratic(7, 40, 1e3);
  const auto& Aa = dynamic_cast<const QuadraticObjective&>(a.f()).A();
  const auto& Ab = dynamic_cast<const QuadraticObjective&>(b.f()).A();
  CHECK(Aa == Ab);
  CHECK(*a.x_star == *b.x_star);
  CHECK(*a.f_star == *b.f_star);

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Aa);
  CHECK(eig.eigenvalues().minCoeff() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(eig.eigenvalues().maxCoeff() == doctest::Approx(1e3).epsilon(1e-10));

  const OracleResult at_star = evaluate(a.f(), *a.x_star);
  CHECK(at_star.gradient.norm() <= 1e-9);
  CHECK_THROWS(make_quadratic(1, 5, 0.5));
}

TEST_CASE("lipschitz pair test on the cond-1e4 quadratic") {
  const Problem p = make_quadratic(7, 100, 1e4);
  CHECK(*p.L == 1e4);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const Point x = gaussian(rng, 100, 10.0);
    const Point z = gaussian(rng, 100, 10.0);
    const double lhs = (evaluate(p.f(), x).gradient - evaluate(p.f(), z).gradient).norm();
    CHECK(lhs <= *p.L * (x - z).norm() * (1.0 + 1e-10));
  }
}

TEST_CASE("logistic instances") {
  SparseDataset one;
  one.rows = {{{1, 1.0}}};
  one.labels = {1};
  one.n_features = 2;
  const Problem p = logistic_problem(one, 0.0);
  const OracleResult r = evaluate(p.f(), Point::Zero(2));
  CHECK(r.value == doctest::Approx(std::log(2.0)));
  CHECK(r.gradient[0] == doctest::Approx(-0.5));
  CHECK(r.gradient[1] == 0.0);

  const SparseDataset data = make_classification(4, 120, 10, 0.6, 0.1);
  for (double reg : {0.0, 1e-3, 1.0}) {
    const Problem q = logistic_problem(data, reg);
    CHECK(*q.L >= reg);
    CHECK(evaluate(q.f(), Point::Zero(10)).value ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
  }
  CHECK_THROWS(logistic_problem(SparseDataset{}, 0.0));
}

TEST_CASE("logistic smoothness bound") {
  const SparseDataset data = make_classification(8, 300, 15, 0.5, 0.05);
  const Problem p = logistic_problem(data, 0.0);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Point x = gaussian(rng, 15);
    const Point z = gaussian(rng, 15);
    const double lhs = (evaluate(p.f(), x).gradient - evaluate(p.f(), z).gradient).norm();
    CHECK(lhs <= *p.L * (x - z).norm() * (1.0 + 1e-8));
  }
}

TEST_CASE("log-sum-exp instances") {
  Eigen::MatrixXd A(2, 1);
  A << 1.0, -1.0;
  const Problem sym = logsumexp_problem(A, Eigen::VectorXd::Zero(2), 1.0);
  const OracleResult r = evaluate(sym.f(), Point::Zero(1));
  CHECK(r.value == doctest::Approx(std::log(2.0)));
  CHECK(std::abs(r.gradient[0]) <= 1e-16);

  const OracleResult far = evaluate(sym.f(), Point{{1e5}});
  CHECK(std::isfinite(far.value));
  CHECK(far.value == doctest::Approx(1e5));
  CHECK(far.gradient[0] == doctest::Approx(1.0));

  const Problem smooth = logsumexp_problem(6, 5, 8, 50.0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    CHECK(finite_diff_check(smooth.f(), gaussian(rng, 5)) <= 1e-5);
  }
  CHECK(*logsumexp_problem(6, 5, 8, 0.5).L > *smooth.L);
}

TEST_CASE("power iteration") {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(3, 3);
  M.diagonal() << 1.0, 5.0, 2.0;
  const auto res = power_iteration([&](const Point& v) { return Point(M * v); }, 3);
  CHECK(res.converged);
  CHECK(res.eigenvalue == doctest::Approx(5.0).epsilon(1e-9));
}
