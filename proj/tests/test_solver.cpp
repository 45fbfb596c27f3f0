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
#include <limits>

#include "agraal/problems.hpp"
#include "agraal/solver.hpp"

using namespace agraal;

namespace {

class Affine final : public Objective {
 public:
  Index dim() const override { return 1; }
  OracleResult value_and_gradient(const Point& x) const override {
    return OracleResult{x[0], Point::Ones(1)};
  }
};

// 1/2 x^2 that breaks down once x drops below 0.5.
class Fragile final : public Objective {
 public:
  Index dim() const override { return 1; }
  OracleResult value_and_gradient(const Point& x) const override {
    if (x[0] < 0.5) return OracleResult{std::nan(""), Point::Constant(1, std::nan(""))};
    return OracleResult{0.5 * x[0] * x[0], x};
  }
};

std::size_t first_eta_at_least(const Trace& t, double level) {
  for (const auto& r : t.records) {
    if (r.eta >= level) return r.k;
  }
  return std::numeric_limits<std::size_t>::max();
}

}  // namespace

TEST_CASE("init assignments") {
  const Problem p = isotropic_quadratic(3);
  CountingOracle oracle(p.f());
  const Point x0{{1.0, -2.0, 0.5}};
  const IterState s = init(x0, SolverParams::defaults(0.1), oracle);
  CHECK(oracle.evaluations() == 1);
  CHECK(s.k == 0);
  CHECK(s.alpha == 1.0);
  CHECK(s.beta == 1.0);
  CHECK(s.H == 0.1);
  CHECK(s.H_prev == 0.1);
  CHECK(s.eta_prev == 0.1);
  CHECK(s.eta == 0.1);
  CHECK(s.x_tilde == x0);
  CHECK(s.x_bar == x0);
  CHECK(s.bregman_bar_tilde == 0.0);
  CHECK_THROWS(init(x0, SolverParams{1.5, 0.1, 0.1, 0.1}, oracle));
}

TEST_CASE("golden first step on f = x^2/2") {
  const Problem p = isotropic_quadratic(1);
  CountingOracle oracle(p.f());
  const SolverParams params = SolverParams::defaults(0.1);
  const IterState s0 = init(Point{{1.0}}, params, oracle);
  const IterState s1 = step(s0, oracle, params);
  CHECK(oracle.evaluations() == 3);

  // hand-executed update lines
  const double alpha1 = 23.0 / 45.0;
  const double x1 = 0.9;
  const double xbar1 = 1.0;
  const double xhat1 = 0.7;
  const double xtilde1 = alpha1 * 0.7 + (1.0 - alpha1) * 1.0;
  const double eta1 = 11.0 / 2116.0;
  const double H1 = 0.1 + eta1;
  const double beta1 = eta1 / (alpha1 * H1);

  CHECK(std::abs(s1.alpha - alpha1) <= 1e-12);
  CHECK(std::abs(s1.x[0] - x1) <= 1e-12);
  CHECK(std::abs(s1.x_bar[0] - xbar1) <= 1e-12);
  CHECK(std::abs(s1.x_hat[0] - xhat1) <= 1e-12);
  CHECK(std::abs(s1.x_tilde[0] - xtilde1) <= 1e-12);
  REQUIRE(s1.lambda.has_value());
  CHECK(std::abs(s1.lambda->value() - 1.0) <= 1e-12);
  CHECK(std::abs(s1.eta - eta1) <= 1e-12);
  CHECK(std::abs(s1.H - H1) <= 1e-12);
  CHECK(std::abs(s1.beta - beta1) <= 1e-12);
}

TEST_CASE("two evaluations per step") {
  const Problem p = make_quadratic(1, 20, 100.0);
  CountingOracle oracle(p.f());
  const SolverParams params = SolverParams::defaults(1e-3);
  IterState s = init(Point::Ones(20), params, oracle);
  for (int k = 0; k < 50; ++k) {
    const auto before = oracle.evaluations();
    s = step(s, oracle, params);
    CHECK(oracle.evaluations() == before + 2);
  }
}

TEST_CASE("infinite curvature estimate takes the full growth factor") {
  Affine f;
  CountingOracle oracle(f);
  const SolverParams params = SolverParams::defaults(0.1);
  const IterState s1 = step(init(Point{{5.0}}, params, oracle), oracle, params);
  REQUIRE(s1.lambda.has_value());
  CHECK(s1.lambda->is_infinite());
  CHECK(s1.eta == doctest::Approx((1.0 + params.gamma) * 0.1).epsilon(1e-15));
}

TEST_CASE("isotropic quadratic converges within the corollary bound") {
  const Problem p = isotropic_quadratic(10);
  const Point x0 = Point::Ones(10);
  const SolverParams params = SolverParams::defaults(0.1);
  StopRule stop;
  stop.max_iters = 2000;
  const Trace t = run(p.f(), x0, params, stop);
  CHECK(t.iterations() == 2000);
  const double gap = t.records.back().f_bar - 0.0;
  CHECK(gap <= 1e-10);
  const double H_prev = t.records[t.records.size() - 2].H;
  const double bound = (0.5 * x0.squaredNorm() +
                        (1.0 + params.gamma * params.theta) * 0.01 * x0.squaredNorm() / 2.0) /
                       H_prev;
  CHECK(gap <= bound);
  CHECK(t.solution.size() == 10);
}

TEST_CASE("zero iterations returns the initial point") {
  const Problem p = isotropic_quadratic(4);
  StopRule stop;
  stop.max_iters = 0;
  const Point x0{{1.0, 2.0, 3.0, 4.0}};
  const Trace t = run(p.f(), x0, SolverParams::defaults(0.1), stop);
  CHECK(t.records.size() == 1);
  CHECK(t.solution == x0);
  CHECK(t.evaluations() == 1);
}

TEST_CASE("stop rules") {
  const Problem p = isotropic_quadratic(5);
  StopRule grad;
  grad.max_iters = 100000;
  grad.grad_tol = 1e-6;
  const Trace tg = run(p.f(), Point::Ones(5), SolverParams::defaults(1.0), grad);
  CHECK(tg.stop_reason == StopReason::kGradTol);

  StopRule gap;
  gap.max_iters = 100000;
  gap.gap_tol = 1e-8;
  RunOptions opts;
  opts.f_star = 0.0;
  const Trace tf = run(p.f(), Point::Ones(5), SolverParams::defaults(1.0), gap, opts);
  CHECK(tf.stop_reason == StopReason::kGapTol);
  CHECK(tf.records.back().f_bar <= 1e-8);
  CHECK_THROWS(run(p.f(), Point::Ones(5), SolverParams::defaults(1.0), gap));
}

TEST_CASE("divergence is recorded, not thrown") {
  Fragile f;
  StopRule stop;
  stop.max_iters = 100;
  const Trace t = run(f, Point{{1.0}}, SolverParams::defaults(0.5), stop);
  CHECK(t.diverged());
  CHECK_FALSE(t.message.empty());
}

TEST_CASE("growth cap slows recovery from a tiny stepsize") {
  const Problem p = isotropic_quadratic(1);
  StopRule stop;
  stop.max_iters = 3000;
  const SolverParams params = SolverParams::defaults(1e-10);
  const Trace plain = run(p.f(), Point{{1.0}}, params, stop);
  RunOptions capped_opts;
  capped_opts.growth_cap = true;
  const Trace capped = run(p.f(), Point{{1.0}}, params, stop, capped_opts);
  const std::size_t k_plain = first_eta_at_least(plain, 1e-2);
  const std::size_t k_capped = first_eta_at_least(capped, 1e-2);
  CHECK(k_plain < 3000);
  CHECK(k_capped > k_plain);
  CHECK(capped.method == "agraal_capped");
}

TEST_CASE("iterate history is stored on request") {
  const Problem p = isotropic_quadratic(2);
  StopRule stop;
  stop.max_iters = 5;
  RunOptions opts;
  opts.store_iterates = true;
  const Trace t = run(p.f(), Point::Ones(2), SolverParams::defaults(0.1), stop, opts);
  REQUIRE(t.iterates.has_value());
  CHECK(t.iterates->x.size() == 6);
  CHECK(t.iterates->x_bar.back() == t.solution);
}
