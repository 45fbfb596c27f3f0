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

#ifndef AGRAAL_EXPERIMENT_HPP
#define AGRAAL_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agraal/baselines.hpp"
#include "agraal/diagnostics.hpp"
#include "agraal/params.hpp"
#include "agraal/problems.hpp"
#include "agraal/trace.hpp"

namespace agraal {

enum ExitCode : int {
  kExitOk = 0,
  kExitCertificateFailure = 1,
  kExitConfigError = 2,
  kExitDivergence = 3,
};

/// A config violation; `path` names the offending field, e.g.
/// "methods[1].eta0".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A stepsize given either as a number or as "1/L".
struct StepSpec {
  double value = 0.0;
  bool inverse_L = false;

  double resolve(const Problem& p) const;
};

struct MethodConfig {
  std::string name;
  /// "agraal" or a baseline name.
  std::string kind;
  std::optional<StepSpec> eta0;
  std::optional<StepSpec> eta;
  double theta = 2.0;
  std::optional<double> gamma;
  /// AdGD only.
  std::optional<double> adgd_gamma;
  std::optional<double> adgd_nu;
  bool adgd_option2 = false;
  std::optional<double> f_star;
  StopRule stop;
  bool store_iterates = false;
  bool growth_cap = false;
};

enum class RefPoint { kStar, kX0, kRandom };

struct CheckSelection {
  bool lemmas = false;
  bool psi = false;
  bool corollary = false;
  bool h_envelope = false;
  std::vector<RefPoint> x_refs{RefPoint::kStar};

  bool any() const { return lemmas || psi || corollary || h_envelope; }
};

/// Experiment document (JSON). See README for the field reference.
struct ExperimentConfig {
  std::string problem_json;           // canonical dump of the "problem" object
  std::string base_dir;
  std::string output_dir;
  std::uint64_t seed = 0;
  std::vector<double> x0_values;
  std::string x0_kind = "zeros";
  std::vector<MethodConfig> methods;
  CheckSelection checks;
};

ExperimentConfig parse_config(const std::string& text, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

/// Builds a problem from its JSON description, e.g.
///   {"kind": "quadratic", "dim": 100, "cond": 1e4, "seed": 7}.
Problem build_problem(const std::string& problem_json, const std::string& base_dir = ".");

Point make_x0(const ExperimentConfig& cfg, Index dim);

Point reference_point(RefPoint which, const Problem& problem, const Point& x0,
                      std::uint64_t seed);
const char* to_string(RefPoint r);

/// Builds solver parameters for an accelerated-method entry.
SolverParams method_params(const MethodConfig& m, const Problem& p);

/// Certificates for an accelerated-method trace.
CertificateReport run_certificates(const Trace& trace, const Problem& problem,
                                   const SolverParams& params, const CheckSelection& checks,
                                   const Point& x0, std::uint64_t seed);

int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err);
int cmd_params(double theta, std::optional<double> gamma, std::ostream& out, std::ostream& err);

struct CheckOptions {
  double theta = 2.0;
  std::optional<double> gamma;
  CheckSelection checks{true, true, true, true, {RefPoint::kStar}};
  std::uint64_t seed = 0;
};

/// `problem_spec` is a JSON object or a path to a file holding one.
int cmd_check(const std::string& trace_csv, const std::string& problem_spec,
              const CheckOptions& opts, std::ostream& out, std::ostream& err);

void print_report(std::ostream& out, const CertificateReport& report);

}  // namespace agraal

#endif  // AGRAAL_EXPERIMENT_HPP
