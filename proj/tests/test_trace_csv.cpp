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
#include <cstring>
#include <limits>
#include <sstream>

#include "agraal/baselines.hpp"
#include "agraal/problems.hpp"
#include "agraal/solver.hpp"
#include "agraal/trace_csv.hpp"

using namespace agraal;

namespace {

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

bool same_opt(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_bits(*a, *b);
}

}  // namespace

TEST_CASE("trace csv round-trip is bit-exact") {
  const Problem p = make_quadratic(5, 6, 1e3);
  StopRule stop;
  stop.max_iters = 80;
  RunOptions opts;
  opts.store_iterates = true;
  const Trace t = run(p.f(), Point::Ones(6), SolverParams::defaults(1e-3), stop, opts);

  std::stringstream buf;
  write_trace_csv(buf, t);
  const std::string first = buf.str();
  const Trace u = read_trace_csv(buf);

  REQUIRE(u.records.size() == t.records.size());
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const IterRecord& a = t.records[i];
    const IterRecord& b = u.records[i];
    CHECK(a.k == b.k);
    CHECK(same_bits(a.eta, b.eta));
    CHECK(same_bits(a.H, b.H));
    CHECK(same_opt(a.alpha, b.alpha));
    CHECK(same_opt(a.beta, b.beta));
    CHECK(same_opt(a.lambda, b.lambda));
    CHECK(same_bits(a.f_bar, b.f_bar));
    CHECK(same_bits(a.f_tilde, b.f_tilde));
    CHECK(same_bits(a.grad_norm_tilde, b.grad_norm_tilde));
    CHECK(a.evals == b.evals);
    CHECK(t.iterates->x[i] == u.iterates->x[i]);
    CHECK(t.iterates->x_bar[i] == u.iterates->x_bar[i]);
    CHECK(t.iterates->x_tilde[i] == u.iterates->x_tilde[i]);
  }

  std::stringstream again;
  write_trace_csv(again, u);
  CHECK(again.str() == first);
}

TEST_CASE("infinite lambda is written empty and read back as infinity") {
  Trace t;
  t.records.resize(2);
  t.records[1].k = 1;
  t.records[1].lambda = std::numeric_limits<double>::infinity();
  std::stringstream buf;
  write_trace_csv(buf, t);
  CHECK(buf.str().find("inf") == std::string::npos);
  const Trace u = read_trace_csv(buf);
  CHECK_FALSE(u.records[0].lambda.has_value());
  CHECK(std::isinf(*u.records[1].lambda));

  std::stringstream plain(buf.str());
  TraceCsvOptions o;
  o.empty_lambda_is_infinite = false;
  CHECK_FALSE(read_trace_csv(plain, o).records[1].lambda.has_value());
}

TEST_CASE("baseline traces share the schema") {
  const Problem p = isotropic_quadratic(3);
  BaselineMethod gd;
  gd.kind = BaselineKind::kGD;
  gd.eta = 0.5;
  StopRule stop;
  stop.max_iters = 10;
  const Trace t = run_baseline(gd, p.f(), Point::Ones(3), stop);
  std::stringstream buf;
  write_trace_csv(buf, t);
  TraceCsvOptions o;
  o.empty_lambda_is_infinite = false;
  const Trace u = read_trace_csv(buf, o);
  CHECK(u.records.size() == 11);
  CHECK_FALSE(u.iterates.has_value());
}

TEST_CASE("schema errors") {
  std::istringstream wrong_header("k,eta,H\n0,1,1\n");
  CHECK_THROWS_AS(read_trace_csv(wrong_header), TraceSchemaError);
  std::istringstream short_row(
      "k,eta,H,alpha,beta,lambda,f_bar,f_tilde,grad_norm_tilde,evals_cum\n0,1,1\n");
  CHECK_THROWS_AS(read_trace_csv(short_row), TraceSchemaError);
  std::istringstream bad_cell(
      "k,eta,H,alpha,beta,lambda,f_bar,f_tilde,grad_norm_tilde,evals_cum\n0,x,1,1,1,,0,0,0,1\n");
  CHECK_THROWS_AS(read_trace_csv(bad_cell), TraceSchemaError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_trace_csv(empty), TraceSchemaError);
}
