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

#include "agraal/diagnostics.hpp"
#include "agraal/problems.hpp"
#include "agraal/solver.hpp"

using namespace agraal;

namespace {

// Hand-rolled generators for randomised invariant checks.
struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  Index dim(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }
  std::uint64_t seed() { return rng(); }
  Point point(Index d, double scale) {
    std::normal_distribution<double> normal(0.0, scale);
    Point x(d);
    for (Index i = 0; i < d; ++i) x[i] = normal(rng);
    return x;
  }

  Problem problem() {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0: return isotropic_quadratic(dim(1, 12), log_uniform(0.1, 10.0));
      case 1: return make_quadratic(seed(), dim(2, 30), log_uniform(1.0, 1e4));
      case 2:
        return logistic_problem(
            make_classification(seed(), static_cast<std::size_t>(dim(20, 150)),
                                static_cast<int>(dim(2, 12)), uniform(0.3, 1.0), 0.1),
            uniform(0.0, 0.1));
      default: return logsumexp_problem(seed(), dim(2, 12), dim(4, 30), log_uniform(0.1, 5.0));
    }
  }

  SolverParams params(double eta0) {
    const double theta = uniform(kGoldenRatio + 0.05, 8.0);
    const double gamma = max_gamma(theta) * uniform(0.1, 1.0);
    return SolverParams::from_theta(theta, gamma, eta0);
  }
};

}  // namespace

TEST_CASE("random runs satisfy the certificate suite") {
  Gen gen(20261017);
  for (int trial = 0; trial < 40; ++trial) {
    const Problem p = gen.problem();
    const double eta0 = gen.log_uniform(1e-10, 10.0);
    const SolverParams params = gen.params(eta0);
    const Point x0 = gen.point(p.dim(), 2.0);
    StopRule stop;
    stop.max_iters = 300;
    RunOptions opts;
    opts.store_iterates = true;
    const Trace t = run(p.f(), x0, params, stop, opts);
    INFO("trial " << trial << " " << p.label << " theta=" << params.theta
                  << " gamma=" << params.gamma << " eta0=" << eta0);
    REQUIRE_FALSE(t.diverged());
    CHECK(t.evaluations() == 1 + 2 * t.iterations());

    for (const auto& e : check_lemmas(t, params, p.L, &p.f())) {
      INFO(e.name << " worst=" << e.worst_violation);
      CHECK(e.passed);
    }
    for (const Point& ref : {x0, gen.point(p.dim(), 3.0)}) {
      const LyapunovSeries s = lyapunov_series(t, ref, p.f(), params);
      CHECK(check_monotone_psi(s).passed);
      CHECK(check_corollary_bound(t, ref, p.f(), params).passed);
    }
    if (p.L) CHECK(check_h_envelope(t, params, *p.L).passed);
  }
}

TEST_CASE("random parameter draws are feasible") {
  Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SolverParams p = gen.params(gen.log_uniform(1e-12, 1e3));
    const ParamReport r = validate(p);
    CHECK(r.passed());
    CHECK(r.equality_residual <= 1e-14);
    CHECK(r.inequality_slack >= -1e-12);
  }
}

TEST_CASE("stepsize recursion bounds") {
  Gen gen(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Problem p = gen.problem();
    const SolverParams params = gen.params(gen.log_uniform(1e-8, 1.0));
    StopRule stop;
    stop.max_iters = 200;
    const Trace t = run(p.f(), gen.point(p.dim(), 1.0), params, stop);
    for (std::size_t k = 1; k < t.records.size(); ++k) {
      const IterRecord& r = t.records[k];
      CHECK(r.eta <= (1.0 + params.gamma) * t.records[k - 1].eta * (1.0 + 1e-12));
      CHECK(*r.alpha > 0.0);
      CHECK(*r.alpha <= 1.0);
      CHECK(*r.beta > 0.0);
      CHECK(*r.beta <= 1.0);
      CHECK(std::abs(r.eta - *r.alpha * *r.beta * r.H) <= 1e-12 * r.eta);
    }
  }
}
