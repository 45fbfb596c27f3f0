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

#include "agraal/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "agraal/solver.hpp"
#include "agraal/trace_csv.hpp"

namespace agraal {

namespace fs = std::filesystem;
using json = nlohmann::json;

ConfigError::ConfigError(std::string path, const std::string& what)
    : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

namespace {

// Reads fields of one JSON object, remembering which keys were used so that
// unknown keys can be rejected.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected an object");
  }

  std::string at(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  const json* get(const std::string& key) {
    used_.insert(key);
    if (!has(key)) return nullptr;
    return &j_.at(key);
  }

  std::optional<double> number(const std::string& key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) throw ConfigError(at(key), "expected a number");
    return v->get<double>();
  }

  double number(const std::string& key, double fallback) {
    return number(key).value_or(fallback);
  }

  double required_number(const std::string& key) {
    auto v = number(key);
    if (!v) throw ConfigError(at(key), "required field missing");
    return *v;
  }

  std::optional<std::uint64_t> uint(const std::string& key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer() || v->get<long long>() < 0) {
      throw ConfigError(at(key), "expected a nonnegative integer");
    }
    return v->get<std::uint64_t>();
  }

  std::uint64_t required_uint(const std::string& key) {
    auto v = uint(key);
    if (!v) throw ConfigError(at(key), "required field missing");
    return *v;
  }

  std::optional<std::string> string(const std::string& key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) throw ConfigError(at(key), "expected a string");
    return v->get<std::string>();
  }

  bool boolean(const std::string& key, bool fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_boolean()) throw ConfigError(at(key), "expected true or false");
    return v->get<bool>();
  }

  std::optional<StepSpec> step(const std::string& key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    if (v->is_string()) {
      if (v->get<std::string>() != "1/L") throw ConfigError(at(key), "expected a number or \"1/L\"");
      return StepSpec{0.0, true};
    }
    if (!v->is_number() || !(v->get<double>() > 0.0)) {
      throw ConfigError(at(key), "expected a positive number or \"1/L\"");
    }
    return StepSpec{v->get<double>(), false};
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw ConfigError(at(key), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", what + " is not valid JSON: " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Index positive_dim(Fields& f, const std::string& key) {
  const std::uint64_t d = f.required_uint(key);
  if (d < 1) throw ConfigError(f.at(key), "must be >= 1");
  return static_cast<Index>(d);
}

Problem build_problem_json(const json& j, const std::string& base_dir, const std::string& path) {
  Fields f(j, path);
  const auto kind = f.string("kind");
  if (!kind) throw ConfigError(f.at("kind"), "required field missing");
  Problem p;
  try {
    if (*kind == "quadratic") {
      const Index dim = positive_dim(f, "dim");
      const double cond = f.number("cond", 1.0);
      if (!(cond >= 1.0)) throw ConfigError(f.at("cond"), "must be >= 1");
      p = make_quadratic(f.uint("seed").value_or(0), dim, cond);
    } else if (*kind == "isotropic") {
      const Index dim = positive_dim(f, "dim");
      const double scale = f.number("scale", 1.0);
      if (!(scale > 0.0)) throw ConfigError(f.at("scale"), "must be positive");
      p = isotropic_quadratic(dim, scale);
    } else if (*kind == "logistic") {
      const double reg = f.number("reg", 0.0);
      if (!(reg >= 0.0)) throw ConfigError(f.at("reg"), "must be nonnegative");
      SparseDataset data;
      const auto file = f.string("path");
      const json* synth = f.get("synthetic");
      if (file && synth) throw ConfigError(f.at("path"), "give either path or synthetic, not both");
      if (file) {
        fs::path dp(*file);
        if (dp.is_relative()) dp = fs::path(base_dir) / dp;
        try {
          data = load_libsvm(dp.string(), static_cast<int>(f.uint("n_features").value_or(0)));
        } catch (const LibsvmParseError& e) {
          throw ConfigError(f.at("path"), dp.string() + ": " + e.what());
        } catch (const std::runtime_error& e) {
          throw ConfigError(f.at("path"), e.what());
        }
      } else if (synth) {
        Fields s(*synth, f.at("synthetic"));
        const std::uint64_t n = s.required_uint("n_samples");
        const Index d = positive_dim(s, "n_features");
        const double density = s.number("density", 1.0);
        const double noise = s.number("label_noise", 0.1);
        const std::uint64_t seed = s.uint("seed").value_or(0);
        s.finish();
        if (n < 1) throw ConfigError(s.at("n_samples"), "must be >= 1");
        if (!(density > 0.0 && density <= 1.0)) throw ConfigError(s.at("density"), "must be in (0, 1]");
        if (!(noise >= 0.0 && noise <= 1.0)) throw ConfigError(s.at("label_noise"), "must be in [0, 1]");
        data = make_classification(seed, n, static_cast<int>(d), density, noise);
      } else {
        throw ConfigError(f.at("path"), "logistic problem needs path or synthetic");
      }
      p = logistic_problem(data, reg);
    } else if (*kind == "logsumexp") {
      const Index dim = positive_dim(f, "dim");
      const std::uint64_t terms = f.required_uint("n_terms");
      if (terms < 2) throw ConfigError(f.at("n_terms"), "must be >= 2");
      const double mu = f.number("smoothing", 1.0);
      if (!(mu > 0.0)) throw ConfigError(f.at("smoothing"), "must be positive");
      p = logsumexp_problem(f.uint("seed").value_or(0), dim, static_cast<Index>(terms), mu);
    } else {
      throw ConfigError(f.at("kind"), "unknown problem kind '" + *kind + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
  f.finish();
  return p;
}

const std::set<std::string> kMethodKinds = {"agraal", "gd", "agd", "adgd", "adagrad", "bb", "polyak"};

MethodConfig parse_method(const json& j, const std::string& path) {
  Fields f(j, path);
  MethodConfig m;
  const auto kind = f.string("kind");
  if (!kind) throw ConfigError(f.at("kind"), "required field missing");
  if (!kMethodKinds.count(*kind)) throw ConfigError(f.at("kind"), "unknown method '" + *kind + "'");
  m.kind = *kind;
  m.name = f.string("name").value_or(*kind);
  if (m.name.empty() || m.name.find_first_of("/\\") != std::string::npos) {
    throw ConfigError(f.at("name"), "must be a plain file-name stem");
  }
  m.eta0 = f.step("eta0");
  m.eta = f.step("eta");
  m.theta = f.number("theta", 2.0);
  m.gamma = f.number("gamma");
  m.adgd_gamma = f.number("adgd_gamma");
  m.adgd_nu = f.number("adgd_nu");
  m.adgd_option2 = f.boolean("adgd_option2", false);
  m.f_star = f.number("f_star");
  m.stop.max_iters = static_cast<std::size_t>(f.uint("max_iters").value_or(1000));
  m.stop.grad_tol = f.number("grad_tol", 0.0);
  m.stop.gap_tol = f.number("gap_tol");
  m.store_iterates = f.boolean("store_iterates", false);
  m.growth_cap = f.boolean("growth_cap", false);
  f.finish();
  if (m.stop.grad_tol < 0.0) throw ConfigError(f.at("grad_tol"), "must be nonnegative");
  if (m.kind != "agraal" && (m.gamma || m.growth_cap)) {
    throw ConfigError(f.at(m.gamma ? "gamma" : "growth_cap"), "only valid for agraal");
  }
  return m;
}

CheckSelection parse_checks(const json* checks, const json* refs, const std::string& base) {
  CheckSelection c;
  if (checks) {
    const std::string path = base.empty() ? "checks" : base + ".checks";
    if (!checks->is_array()) throw ConfigError(path, "expected an array of check names");
    for (std::size_t i = 0; i < checks->size(); ++i) {
      const json& v = (*checks)[i];
      const std::string at = path + "[" + std::to_string(i) + "]";
      if (!v.is_string()) throw ConfigError(at, "expected a string");
      const auto name = v.get<std::string>();
      if (name == "lemmas") c.lemmas = true;
      else if (name == "psi") c.psi = true;
      else if (name == "corollary") c.corollary = true;
      else if (name == "h_envelope") c.h_envelope = true;
      else if (name == "all") c.lemmas = c.psi = c.corollary = c.h_envelope = true;
      else throw ConfigError(at, "unknown check '" + name + "'");
    }
  }
  if (refs) {
    const std::string path = base.empty() ? "x_ref" : base + ".x_ref";
    if (!refs->is_array() || refs->empty()) throw ConfigError(path, "expected a nonempty array");
    c.x_refs.clear();
    for (std::size_t i = 0; i < refs->size(); ++i) {
      const json& v = (*refs)[i];
      const std::string at = path + "[" + std::to_string(i) + "]";
      const std::string name = v.is_string() ? v.get<std::string>() : "";
      if (name == "star") c.x_refs.push_back(RefPoint::kStar);
      else if (name == "x0") c.x_refs.push_back(RefPoint::kX0);
      else if (name == "random") c.x_refs.push_back(RefPoint::kRandom);
      else throw ConfigError(at, "expected \"star\", \"x0\" or \"random\"");
    }
  }
  return c;
}

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json report_json(const CertificateReport& rep) {
  json arr = json::array();
  for (const auto& e : rep.entries) {
    json j{{"name", e.name}, {"passed", e.passed}, {"checked", e.checked},
           {"worst_violation", e.worst_violation}};
    j["worst_k"] = e.worst_k ? json(*e.worst_k) : json(nullptr);
    if (!e.note.empty()) j["note"] = e.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

BaselineMethod baseline_method(const MethodConfig& m, const Problem& p) {
  BaselineMethod b;
  b.kind = baseline_from_string(m.kind);
  if (m.eta) b.eta = m.eta->resolve(p);
  if (m.eta0) b.eta0 = m.eta0->resolve(p);
  if (m.adgd_gamma) b.gamma = *m.adgd_gamma;
  if (m.adgd_nu) b.nu = *m.adgd_nu;
  b.adgd_option2 = m.adgd_option2;
  b.f_star = m.f_star ? m.f_star : p.f_star;
  b.validate();
  return b;
}

}  // namespace

double StepSpec::resolve(const Problem& p) const {
  if (!inverse_L) return value;
  if (!p.L) throw std::invalid_argument("stepsize \"1/L\" needs a problem with known L");
  return 1.0 / *p.L;
}

const char* to_string(RefPoint r) {
  switch (r) {
    case RefPoint::kStar: return "star";
    case RefPoint::kX0: return "x0";
    case RefPoint::kRandom: return "random";
  }
  return "unknown";
}

ExperimentConfig parse_config(const std::string& text, const std::string& base_dir) {
  const json doc = parse_json(text, "config");
  Fields f(doc, "");
  ExperimentConfig cfg;
  cfg.base_dir = base_dir;
  cfg.output_dir = f.string("output_dir").value_or("out");
  cfg.seed = f.uint("seed").value_or(0);

  const json* problem = f.get("problem");
  if (!problem) throw ConfigError("problem", "required field missing");
  if (!problem->is_object()) throw ConfigError("problem", "expected an object");
  cfg.problem_json = problem->dump();

  if (const json* x0 = f.get("x0")) {
    if (x0->is_string()) {
      cfg.x0_kind = x0->get<std::string>();
      if (cfg.x0_kind != "zeros" && cfg.x0_kind != "ones") {
        throw ConfigError("x0", "expected \"zeros\", \"ones\" or an array");
      }
    } else if (x0->is_array()) {
      cfg.x0_kind = "values";
      for (std::size_t i = 0; i < x0->size(); ++i) {
        if (!(*x0)[i].is_number()) throw ConfigError("x0[" + std::to_string(i) + "]", "expected a number");
        cfg.x0_values.push_back((*x0)[i].get<double>());
      }
    } else {
      throw ConfigError("x0", "expected \"zeros\", \"ones\" or an array");
    }
  }

  const json* methods = f.get("methods");
  if (!methods) throw ConfigError("methods", "required field missing");
  if (!methods->is_array() || methods->empty()) throw ConfigError("methods", "expected a nonempty array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < methods->size(); ++i) {
    const std::string path = "methods[" + std::to_string(i) + "]";
    MethodConfig m = parse_method((*methods)[i], path);
    if (!names.insert(m.name).second) throw ConfigError(path + ".name", "duplicate method name '" + m.name + "'");
    cfg.methods.push_back(std::move(m));
  }

  cfg.checks = parse_checks(f.get("checks"), f.get("x_ref"), "");
  f.finish();

  if (cfg.checks.psi || cfg.checks.corollary) {
    for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
      if (cfg.methods[i].kind == "agraal" && !cfg.methods[i].store_iterates) {
        throw ConfigError("methods[" + std::to_string(i) + "].store_iterates",
                          "store_iterates required by the psi/corollary checks");
      }
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  const std::string text = read_file(path);
  const fs::path parent = fs::path(path).parent_path();
  ExperimentConfig cfg = parse_config(text, parent.empty() ? "." : parent.string());
  fs::path out(cfg.output_dir);
  if (out.is_relative()) cfg.output_dir = (fs::path(cfg.base_dir) / out).string();
  return cfg;
}

Problem build_problem(const std::string& problem_json, const std::string& base_dir) {
  return build_problem_json(parse_json(problem_json, "problem"), base_dir, "problem");
}

Point make_x0(const ExperimentConfig& cfg, Index dim) {
  if (cfg.x0_kind == "ones") return Point::Ones(dim);
  if (cfg.x0_kind == "values") {
    if (static_cast<Index>(cfg.x0_values.size()) != dim) {
      throw ConfigError("x0", "has " + std::to_string(cfg.x0_values.size()) +
                                  " entries, problem dimension is " + std::to_string(dim));
    }
    return Eigen::Map<const Point>(cfg.x0_values.data(), dim);
  }
  return Point::Zero(dim);
}

Point reference_point(RefPoint which, const Problem& problem, const Point& x0,
                      std::uint64_t seed) {
  switch (which) {
    case RefPoint::kStar:
      if (problem.x_star) return *problem.x_star;
      return reference_minimizer(problem, x0);
    case RefPoint::kX0:
      return x0;
    case RefPoint::kRandom: {
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
      std::normal_distribution<double> normal;
      Point x(problem.dim());
      for (Index i = 0; i < x.size(); ++i) x[i] = normal(rng);
      return x;
    }
  }
  return x0;
}

SolverParams method_params(const MethodConfig& m, const Problem& p) {
  if (!m.eta0) throw std::invalid_argument("agraal requires eta0");
  return SolverParams::from_theta(m.theta, m.gamma, m.eta0->resolve(p));
}

CertificateReport run_certificates(const Trace& trace, const Problem& problem,
                                   const SolverParams& params, const CheckSelection& checks,
                                   const Point& x0, std::uint64_t seed) {
  CertificateReport rep;
  if (checks.lemmas) {
    for (auto& e : check_lemmas(trace, params, problem.L, &problem.f())) rep.add(std::move(e));
  }
  bool first = true;
  for (RefPoint which : checks.x_refs) {
    if (!checks.psi && !checks.corollary) break;
    const Point x_ref = reference_point(which, problem, x0, seed);
    const std::string tag = std::string("[") + to_string(which) + "]";
    if (checks.psi) {
      const LyapunovSeries s = lyapunov_series(trace, x_ref, problem.f(), params);
      CertificateEntry e = check_monotone_psi(s);
      e.name += tag;
      rep.add(std::move(e));
      if (first) rep.add(check_infinite_lambda_bregman(s));
    }
    if (checks.corollary) {
      CertificateEntry e = check_corollary_bound(trace, x_ref, problem.f(), params);
      e.name += tag;
      rep.add(std::move(e));
    }
    first = false;
  }
  if (checks.h_envelope) {
    if (problem.L) {
      rep.add(check_h_envelope(trace, params, *problem.L));
    } else {
      CertificateEntry e;
      e.name = "h_envelope";
      e.note = "skipped: smoothness constant unknown";
      rep.add(std::move(e));
    }
  }
  return rep;
}

void print_report(std::ostream& out, const CertificateReport& report) {
  for (const auto& e : report.entries) {
    out << (e.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << e.name
        << " checked=" << e.checked;
    if (!e.passed) {
      out << " worst_violation=" << real(e.worst_violation);
      if (e.worst_k) out << " at k=" << *e.worst_k;
    }
    if (!e.note.empty()) out << "  (" << e.note << ")";
    out << '\n';
  }
}

int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  Problem problem;
  Point x0;
  std::vector<std::variant<SolverParams, BaselineMethod>> plans;
  try {
    cfg = load_config(config_path);
    problem = build_problem(cfg.problem_json, cfg.base_dir);
    x0 = make_x0(cfg, problem.dim());
    for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
      const MethodConfig& m = cfg.methods[i];
      try {
        if (m.kind == "agraal") {
          plans.emplace_back(method_params(m, problem));
        } else {
          plans.emplace_back(baseline_method(m, problem));
        }
        m.stop.validate(problem.f_star);
      } catch (const std::exception& e) {
        throw ConfigError("methods[" + std::to_string(i) + "]", e.what());
      }
    }
    fs::create_directories(cfg.output_dir);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  json summary;
  summary["problem"] = {{"label", problem.label}, {"dim", problem.dim()}};
  summary["problem"]["L"] = problem.L ? json(*problem.L) : json(nullptr);
  summary["problem"]["f_star"] = problem.f_star ? json(*problem.f_star) : json(nullptr);
  summary["methods"] = json::array();

  std::ostringstream table;
  table << "method,kind,iterations,evaluations,f_final,gap,grad_norm_tilde,stop,certificates\n";

  bool any_failed_run = false;
  bool any_failed_cert = false;
  for (std::size_t i = 0; i < cfg.methods.size(); ++i) {
    const MethodConfig& m = cfg.methods[i];
    const std::string csv = (fs::path(cfg.output_dir) / (m.name + ".csv")).string();
    json entry{{"name", m.name}, {"kind", m.kind}, {"csv", m.name + ".csv"}};
    std::string cert_status = "n/a";
    try {
      Trace trace;
      if (const auto* params = std::get_if<SolverParams>(&plans[i])) {
        RunOptions opts;
        opts.store_iterates = m.store_iterates;
        opts.growth_cap = m.growth_cap;
        opts.f_star = problem.f_star;
        opts.problem_label = problem.label;
        opts.L = problem.L;
        trace = run(problem.f(), x0, *params, m.stop, opts);
        entry["params"] = {{"theta", params->theta}, {"gamma", params->gamma},
                           {"nu", params->nu}, {"eta0", params->eta0}};
        if (cfg.checks.any() && !trace.diverged()) {
          const CertificateReport rep =
              run_certificates(trace, problem, *params, cfg.checks, x0, cfg.seed);
          entry["certificates"] = report_json(rep);
          entry["certificates_passed"] = rep.passed();
          cert_status = rep.passed() ? "pass" : "fail";
          if (!rep.passed()) {
            any_failed_cert = true;
            for (const auto& e : rep.entries) {
              if (!e.passed) {
                err << m.name << ": certificate " << e.name << " failed";
                if (e.worst_k) err << " (worst at k=" << *e.worst_k << ")";
                err << '\n';
              }
            }
          }
        }
      } else {
        BaselineOptions opts;
        opts.store_iterates = m.store_iterates;
        opts.f_star = problem.f_star;
        opts.problem_label = problem.label;
        opts.L = problem.L;
        trace = run_baseline(std::get<BaselineMethod>(plans[i]), problem.f(), x0, m.stop, opts);
      }
      save_trace_csv(csv, trace);

      const IterRecord& last = trace.records.back();
      std::size_t flagged = 0;
      for (const auto& r : trace.records) flagged += r.flagged ? 1 : 0;
      entry["iterations"] = trace.iterations();
      entry["evaluations"] = trace.evaluations();
      entry["stop_reason"] = to_string(trace.stop_reason);
      entry["f_final"] = last.f_bar;
      entry["gap"] = problem.f_star ? json(last.f_bar - *problem.f_star) : json(nullptr);
      entry["flagged_records"] = flagged;
      if (trace.diverged()) {
        entry["message"] = trace.message;
        any_failed_run = true;
        err << m.name << ": run diverged: " << trace.message << '\n';
      }
      table << m.name << ',' << m.kind << ',' << trace.iterations() << ','
            << trace.evaluations() << ',' << real(last.f_bar) << ','
            << (problem.f_star ? real(last.f_bar - *problem.f_star) : "") << ','
            << real(last.grad_norm_tilde) << ',' << to_string(trace.stop_reason) << ','
            << cert_status << '\n';
    } catch (const std::exception& e) {
      any_failed_run = true;
      entry["error"] = e.what();
      err << m.name << ": run failed: " << e.what() << '\n';
      table << m.name << ',' << m.kind << ",,,,,,error," << cert_status << '\n';
    }
    summary["methods"].push_back(std::move(entry));
  }

  {
    std::ofstream js((fs::path(cfg.output_dir) / "summary.json").string(), std::ios::binary);
    js << summary.dump(2) << '\n';
    std::ofstream tb((fs::path(cfg.output_dir) / "summary.csv").string(), std::ios::binary);
    tb << table.str();
  }
  out << table.str();

  if (any_failed_run) return kExitDivergence;
  if (any_failed_cert) return kExitCertificateFailure;
  return kExitOk;
}

int cmd_params(double theta, std::optional<double> gamma, std::ostream& out, std::ostream& err) {
  double g_max = 0.0;
  try {
    g_max = max_gamma(theta);
  } catch (const std::exception& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitConfigError;
  }
  SolverParams p;
  try {
    p = SolverParams::from_theta(theta, gamma, 1.0);
  } catch (const std::exception& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitConfigError;
  }
  const ParamReport rep = validate(p);
  out << "theta              " << real(p.theta) << '\n'
      << "gamma_max          " << real(g_max) << '\n'
      << "gamma              " << real(p.gamma) << '\n'
      << "nu                 " << real(p.nu) << '\n'
      << "equality_residual  " << real(rep.equality_residual) << '\n'
      << "inequality_slack   " << real(rep.inequality_slack) << '\n'
      << "feasible           " << (rep.equality_ok && rep.inequality_ok ? "yes" : "no") << '\n';
  return rep.equality_ok && rep.inequality_ok ? kExitOk : kExitConfigError;
}

int cmd_check(const std::string& trace_csv, const std::string& problem_spec,
              const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto first = problem_spec.find_first_not_of(" \t\r\n");
    const bool inline_json = first != std::string::npos && problem_spec[first] == '{';
    std::string base_dir = ".";
    std::string text = problem_spec;
    if (!inline_json) {
      text = read_file(problem_spec);
      const fs::path parent = fs::path(problem_spec).parent_path();
      if (!parent.empty()) base_dir = parent.string();
    }
    const Problem problem = build_problem(text, base_dir);
    const Trace trace = load_trace_csv(trace_csv);
    if ((opts.checks.psi || opts.checks.corollary) && !trace.iterates) {
      err << "error: store_iterates required: the psi and corollary checks need iterate "
             "columns in the trace\n";
      return kExitConfigError;
    }
    if (trace.iterates && trace.problem.dim != problem.dim()) {
      err << "error: trace dimension " << trace.problem.dim << " does not match problem dimension "
          << problem.dim() << '\n';
      return kExitConfigError;
    }
    const SolverParams params =
        SolverParams::from_theta(opts.theta, opts.gamma, trace.records.front().eta);
    const Point x0 = trace.iterates ? trace.iterates->x.front() : Point::Zero(problem.dim());
    const CertificateReport rep =
        run_certificates(trace, problem, params, opts.checks, x0, opts.seed);
    print_report(out, rep);
    out << (rep.passed() ? "all certificates passed\n" : "certificate failure\n");
    return rep.passed() ? kExitOk : kExitCertificateFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace agraal
