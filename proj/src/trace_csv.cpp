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

#include "agraal/trace_csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <vector>

namespace agraal {

namespace {

constexpr std::array<const char*, 10> kScalarColumns = {
    "k", "eta", "H", "alpha", "beta", "lambda", "f_bar", "f_tilde", "grad_norm_tilde",
    "evals_cum"};

void put_real(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

void put_opt(std::ostream& out, const std::optional<double>& v) {
  if (v && std::isfinite(*v)) put_real(out, *v);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

double get_real(std::string_view cell, std::size_t row, const char* col) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw TraceSchemaError("row " + std::to_string(row) + ", column " + col +
                           ": expected a number, got '" + std::string(cell) + "'");
  }
  return v;
}

std::optional<double> get_opt(std::string_view cell, std::size_t row, const char* col) {
  if (cell.empty()) return std::nullopt;
  return get_real(cell, row, col);
}

std::uint64_t get_uint(std::string_view cell, std::size_t row, const char* col) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw TraceSchemaError("row " + std::to_string(row) + ", column " + col +
                           ": expected a nonnegative integer, got '" + std::string(cell) + "'");
  }
  return v;
}

}  // namespace

void write_trace_csv(std::ostream& out, const Trace& trace) {
  const bool vectors = trace.iterates.has_value();
  const Index d = vectors && !trace.iterates->x.empty() ? trace.iterates->x.front().size() : 0;
  for (std::size_t i = 0; i < kScalarColumns.size(); ++i) {
    out << (i ? "," : "") << kScalarColumns[i];
  }
  if (vectors) {
    for (const char* prefix : {"x_", "xbar_", "xtilde_"}) {
      for (Index j = 0; j < d; ++j) out << ',' << prefix << j;
    }
  }
  out << '\n';

  for (std::size_t n = 0; n < trace.records.size(); ++n) {
    const IterRecord& r = trace.records[n];
    out << r.k << ',';
    put_real(out, r.eta);
    out << ',';
    put_real(out, r.H);
    out << ',';
    put_opt(out, r.alpha);
    out << ',';
    put_opt(out, r.beta);
    out << ',';
    put_opt(out, r.lambda);
    out << ',';
    put_real(out, r.f_bar);
    out << ',';
    put_real(out, r.f_tilde);
    out << ',';
    put_real(out, r.grad_norm_tilde);
    out << ',' << r.evals;
    if (vectors) {
      for (const auto* seq : {&trace.iterates->x, &trace.iterates->x_bar,
                              &trace.iterates->x_tilde}) {
        const Point& p = (*seq)[n];
        for (Index j = 0; j < d; ++j) {
          out << ',';
          put_real(out, p[j]);
        }
      }
    }
    out << '\n';
  }
}

void save_trace_csv(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trace '" + path + "'");
  write_trace_csv(out, trace);
}

Trace read_trace_csv(std::istream& in, const TraceCsvOptions& opts) {
  std::string line;
  if (!std::getline(in, line)) throw TraceSchemaError("empty trace file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  if (header.size() < kScalarColumns.size()) {
    throw TraceSchemaError("trace header has " + std::to_string(header.size()) +
                           " columns, expected at least " +
                           std::to_string(kScalarColumns.size()));
  }
  for (std::size_t i = 0; i < kScalarColumns.size(); ++i) {
    if (header[i] != kScalarColumns[i]) {
      throw TraceSchemaError("trace header column " + std::to_string(i + 1) + " is '" +
                             std::string(header[i]) + "', expected '" + kScalarColumns[i] + "'");
    }
  }
  const std::size_t extra = header.size() - kScalarColumns.size();
  if (extra % 3 != 0) throw TraceSchemaError("iterate columns are not a multiple of 3");
  const Index d = static_cast<Index>(extra / 3);
  for (Index j = 0; j < d; ++j) {
    const std::size_t base = kScalarColumns.size();
    const std::string sj = std::to_string(j);
    if (header[base + j] != "x_" + sj || header[base + d + j] != "xbar_" + sj ||
        header[base + 2 * d + j] != "xtilde_" + sj) {
      throw TraceSchemaError("unexpected iterate column names near index " + sj);
    }
  }

  Trace trace;
  if (d > 0) trace.iterates.emplace();
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw TraceSchemaError("row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, header has " +
                             std::to_string(header.size()));
    }
    IterRecord r;
    r.k = static_cast<std::size_t>(get_uint(cells[0], row, "k"));
    r.eta = get_real(cells[1], row, "eta");
    r.H = get_real(cells[2], row, "H");
    r.alpha = get_opt(cells[3], row, "alpha");
    r.beta = get_opt(cells[4], row, "beta");
    r.lambda = get_opt(cells[5], row, "lambda");
    if (!r.lambda && r.k >= 1 && opts.empty_lambda_is_infinite) {
      r.lambda = std::numeric_limits<double>::infinity();
    }
    r.f_bar = get_real(cells[6], row, "f_bar");
    r.f_tilde = get_real(cells[7], row, "f_tilde");
    r.grad_norm_tilde = get_real(cells[8], row, "grad_norm_tilde");
    r.evals = get_uint(cells[9], row, "evals_cum");
    trace.records.push_back(r);

    if (d > 0) {
      Point x(d), xb(d), xt(d);
      const std::size_t base = kScalarColumns.size();
      for (Index j = 0; j < d; ++j) {
        x[j] = get_real(cells[base + j], row, "x");
        xb[j] = get_real(cells[base + d + j], row, "xbar");
        xt[j] = get_real(cells[base + 2 * d + j], row, "xtilde");
      }
      trace.iterates->x.push_back(std::move(x));
      trace.iterates->x_bar.push_back(std::move(xb));
      trace.iterates->x_tilde.push_back(std::move(xt));
    }
  }
  if (trace.records.empty()) throw TraceSchemaError("trace has no records");
  trace.problem.dim = d;
  if (trace.iterates) trace.solution = trace.iterates->x_bar.back();
  return trace;
}

Trace load_trace_csv(const std::string& path, const TraceCsvOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace '" + path + "'");
  return read_trace_csv(in, opts);
}

}  // namespace agraal
