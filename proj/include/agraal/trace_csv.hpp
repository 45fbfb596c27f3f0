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

#ifndef AGRAAL_TRACE_CSV_HPP
#define AGRAAL_TRACE_CSV_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "agraal/trace.hpp"

namespace agraal {

// Columns, in order:
//   k, eta, H, alpha, beta, lambda, f_bar, f_tilde, grad_norm_tilde, evals_cum
// followed, when iterates are stored, by x_0..x_{d-1}, xbar_0.., xtilde_0...
// Reals are written with 17 significant digits. An empty cell means the
// field is undefined; in the lambda column an empty cell at k >= 1 means
// +inf for the accelerated method.

class TraceSchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_trace_csv(std::ostream& out, const Trace& trace);
void save_trace_csv(const std::string& path, const Trace& trace);

struct TraceCsvOptions {
  /// Read an empty lambda cell at k >= 1 as +inf (accelerated method) or
  /// as undefined (methods without a curvature estimate).
  bool empty_lambda_is_infinite = true;
};

/// Throws TraceSchemaError on a header or cell that does not match.
Trace read_trace_csv(std::istream& in, const TraceCsvOptions& opts = {});
Trace load_trace_csv(const std::string& path, const TraceCsvOptions& opts = {});

}  // namespace agraal

#endif  // AGRAAL_TRACE_CSV_HPP
