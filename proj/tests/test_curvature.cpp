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
#include <random>

#include "agraal/curvature.hpp"
#include "agraal/problems.hpp"

using namespace agraal;

namespace {

EvaluatedPoint at(const Problem& p, Point x) {
  OracleResult r = evaluate(p.f(), x);
  return EvaluatedPoint{std::move(x), std::move(r)};
}

Problem diag14() { return diagonal_quadratic(Point{{1.0, 4.0}}, Point::Zero(2)); }

// Gradient is (1, 1) everywhere in a neighbourhood of the origin's x-axis.
class Affine final : public Objective {
 public:
  Index dim() const override { return 2; }
  OracleResult value_and_gradient(const Point& x) const override {
    return OracleResult{x.sum(), Point::Ones(2)};
  }
};

}  // namespace

TEST_CASE("extended reals") {
  CHECK(ExtendedReal::infinity().is_infinite());
  CHECK(ExtendedReal(2.0).is_finite());
  CHECK(min(ExtendedReal(2.0), ExtendedReal::infinity()).value() == 2.0);
  CHECK_THROWS(ExtendedReal(-1.0));
  CHECK_THROWS(ExtendedReal(std::nan("")));
}

TEST_CASE("bregman divergence") {
  const Problem id = isotropic_quadratic(2);
  CHECK(bregman(at(id, Point{{1.0, 0.0}}), at(id, Point::Zero(2))) == 0.5);
  CHECK(bregman(at(id, Point{{1.0, 2.0}}), at(id, Point{{1.0, 2.0}})) == 0.0);
  const Problem d = diag14();
  CHECK(bregman(at(d, Point{{1.0, 1.0}}), at(d, Point::Zero(2))) == doctest::Approx(2.5));
  CHECK(bregman(at(d, Point{{1.0, 1.0}}), at(d, Point::Zero(2)), &d.f()) == doctest::Approx(2.5));
}

TEST_CASE("option II estimate") {
  const Problem id = isotropic_quadratic(2);
  CHECK(lambda_option2(at(id, Point{{1.0, 0.0}}), at(id, Point::Zero(2))).value() ==
        doctest::Approx(1.0));
  CHECK(lambda_option2(at(id, Point{{1.0, 0.0}}), at(id, Point{{1.0, 0.0}})).is_infinite());
  const Problem d = diag14();
  const auto lam = lambda_option2(at(d, Point{{1.0, 1.0}}), at(d, Point::Zero(2)));
  CHECK(lam.value() == doctest::Approx(5.0 / 17.0).epsilon(1e-14));
  const auto exact = lambda_option2(at(d, Point{{1.0, 1.0}}), at(d, Point::Zero(2)), {}, &d.f());
  CHECK(exact.value() == doctest::Approx(5.0 / 17.0).epsilon(1e-14));
}

TEST_CASE("option I estimate") {
  const Problem id = isotropic_quadratic(2);
  CHECK(lambda_option1(at(id, Point{{3.0, -1.0}}), at(id, Point{{0.5, 2.0}})).value() ==
        doctest::Approx(1.0));
  CHECK(lambda_option1(at(id, Point{{1.0, 0.0}}), at(id, Point{{1.0, 0.0}})).is_infinite());
  const Problem d = diag14();
  CHECK(lambda_option1(at(d, Point{{1.0, 1.0}}), at(d, Point::Zero(2))).value() ==
        doctest::Approx(std::sqrt(2.0) / std::sqrt(17.0)).epsilon(1e-14));
}

TEST_CASE("locally constant gradient gives an infinite estimate") {
  Affine f;
  const EvaluatedPoint a{Point{{1.0, 0.0}}, f.value_and_gradient(Point{{1.0, 0.0}})};
  const EvaluatedPoint b{Point{{0.0, 2.0}}, f.value_and_gradient(Point{{0.0, 2.0}})};
  CHECK(lambda_option2(a, b).is_infinite());
}

TEST_CASE("local curvature takes the smaller estimate") {
  const Problem id = isotropic_quadratic(3);
  CHECK(local_curvature(at(id, Point{{1.0, 0.0, 0.0}}), at(id, Point{{0.0, 1.0, 0.0}}),
                        at(id, Point{{0.0, 0.0, 1.0}}))
            .value() == doctest::Approx(1.0));

  const Problem d = diag14();
  const EvaluatedPoint bar = at(d, Point{{1.0, 1.0}});
  const EvaluatedPoint same = at(d, Point{{1.0, 1.0}});
  const EvaluatedPoint other = at(d, Point::Zero(2));
  CHECK(local_curvature(bar, same, other).value() ==
        doctest::Approx(lambda_option2(bar, other).value()));
}

TEST_CASE("strict mode rejects nonconvex oracles") {
  // f(x) = -x^2/2 has negative Bregman divergences
  EvaluatedPoint x{Point{{1.0}}, OracleResult{-0.5, Point{{-1.0}}}};
  EvaluatedPoint z{Point{{0.0}}, OracleResult{0.0, Point{{0.0}}}};
  CurvatureOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(lambda_option2(x, z, strict), NonconvexOracle);
  CHECK(lambda_option2(x, z).value() == doctest::Approx(1.0));
}

TEST_CASE("exact differences match the defining formula away from cancellation") {
  std::vector<Problem> problems;
  problems.push_back(make_quadratic(1, 6, 50.0));
  problems.push_back(logistic_problem(make_classification(2, 40, 6, 0.8, 0.1), 1e-2));
  problems.push_back(logsumexp_problem(3, 6, 12, 0.7));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (const Problem& p : problems) {
    for (int t = 0; t < 10; ++t) {
      Point x(p.dim()), z(p.dim());
      for (Index i = 0; i < x.size(); ++i) {
        x[i] = normal(rng);
        z[i] = normal(rng);
      }
      const EvaluatedPoint ex = at(p, x), ez = at(p, z);
      const auto d = p.f().exact_difference(x, z);
      REQUIRE(d.has_value());
      CHECK(d->bregman == doctest::Approx(bregman(ex, ez)).epsilon(1e-9));
      CHECK((d->gradient_diff - (ex.r.gradient - ez.r.gradient)).norm() <=
            1e-12 * (1.0 + d->gradient_diff.norm()));
    }
  }
}

TEST_CASE("exact differences stay accurate for nearly equal points") {
  const Problem q = make_quadratic(7, 20, 1e4);
  Point z = Point::Ones(20) * 3.0;
  Point x = z;
  x[0] += 1e-13;
  const EvaluatedPoint ex = at(q, x), ez = at(q, z);
  const auto lam = lambda_option2(ex, ez, {}, &q.f());
  CHECK(lam.value() >= 1.0 / 1e4 * (1.0 - 1e-10));
}
