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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agraal/experiment.hpp"

int main(int argc, char** argv) {
  using namespace agraal;

  CLI::App app{"Adaptive accelerated gradient method: experiments and certificates"};
  app.require_subcommand(1);

  std::string config;
  auto* run = app.add_subcommand("run", "Run every method of an experiment config");
  run->add_option("config", config, "Experiment JSON file")->required()->check(CLI::ExistingFile);

  double theta = 2.0;
  std::optional<double> gamma;
  auto* params = app.add_subcommand("params", "Derive and validate (theta, gamma, nu)");
  params->add_option("--theta", theta, "Extrapolation parameter, must exceed the golden ratio");
  params->add_option("--gamma", gamma, "Growth parameter; defaults to the largest feasible value");

  std::string trace_path, problem;
  std::vector<std::string> checks{"all"};
  std::vector<std::string> xrefs{"star"};
  std::uint64_t seed = 0;
  auto* check = app.add_subcommand("check", "Re-verify certificates on a saved trace");
  check->add_option("--trace", trace_path, "Trace CSV")->required()->check(CLI::ExistingFile);
  check->add_option("--problem", problem, "Problem JSON object or a file holding one")->required();
  check->add_option("--theta", theta, "theta used for the run");
  check->add_option("--gamma", gamma, "gamma used for the run");
  check->add_option("--checks", checks, "lemmas, psi, corollary, h_envelope or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"lemmas", "psi", "corollary", "h_envelope", "all"}));
  check->add_option("--xref", xrefs, "Reference points: star, x0, random")
      ->delimiter(',')
      ->check(CLI::IsMember({"star", "x0", "random"}));
  check->add_option("--seed", seed, "Seed for the random reference point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  if (*run) return cmd_run(config, std::cout, std::cerr);
  if (*params) return cmd_params(theta, gamma, std::cout, std::cerr);

  CheckOptions opts;
  opts.theta = theta;
  opts.gamma = gamma;
  opts.seed = seed;
  opts.checks = CheckSelection{false, false, false, false, {}};
  for (const auto& c : checks) {
    if (c == "lemmas" || c == "all") opts.checks.lemmas = true;
    if (c == "psi" || c == "all") opts.checks.psi = true;
    if (c == "corollary" || c == "all") opts.checks.corollary = true;
    if (c == "h_envelope" || c == "all") opts.checks.h_envelope = true;
  }
  for (const auto& x : xrefs) {
    if (x == "star") opts.checks.x_refs.push_back(RefPoint::kStar);
    if (x == "x0") opts.checks.x_refs.push_back(RefPoint::kX0);
    if (x == "random") opts.checks.x_refs.push_back(RefPoint::kRandom);
  }
  return cmd_check(trace_path, problem, opts, std::cout, std::cerr);
}
