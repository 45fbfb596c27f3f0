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

#include "agraal/libsvm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace agraal {

std::size_t SparseDataset::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

void SparseDataset::validate() const {
  if (rows.size() != labels.size()) {
    throw std::invalid_argument("row and label counts differ");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (labels[i] != 1 && labels[i] != -1) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + ": label must be +1 or -1");
    }
    int prev = 0;
    for (const auto& [idx, val] : rows[i]) {
      if (idx <= prev || idx > n_features) {
        throw std::invalid_argument("row " + std::to_string(i + 1) +
                                    ": feature index out of order or range");
      }
      if (!std::isfinite(val)) {
        throw std::invalid_argument("row " + std::to_string(i + 1) + ": non-finite value");
      }
      prev = idx;
    }
  }
}

LibsvmParseError::LibsvmParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

double parse_double(std::string_view tok, std::size_t line) {
  double v = 0.0;
  // from_chars rejects a leading '+'
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw LibsvmParseError(line, "non-numeric token '" + std::string(tok) + "'");
  }
  return v;
}

int parse_index(std::string_view tok, std::size_t line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw LibsvmParseError(line, "non-numeric feature index '" + std::string(tok) + "'");
  }
  if (v < 1) throw LibsvmParseError(line, "feature index must be >= 1");
  return v;
}

}  // namespace

SparseDataset parse_libsvm(std::istream& in, int n_features) {
  SparseDataset data;
  std::string text;
  std::size_t line_no = 0;
  int max_index = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ls(text);
    std::string tok;
    if (!(ls >> tok)) continue;

    const double label = parse_double(tok, line_no);
    int y = 0;
    if (label == 1.0) {
      y = 1;
    } else if (label == -1.0 || label == 0.0) {
      y = -1;
    } else {
      throw LibsvmParseError(line_no, "label '" + tok + "' is not one of 0, -1, +1");
    }

    std::vector<SparseDataset::Entry> row;
    int prev = 0;
    while (ls >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw LibsvmParseError(line_no, "expected idx:val, got '" + tok + "'");
      }
      const std::string_view sv(tok);
      const int idx = parse_index(sv.substr(0, colon), line_no);
      const double val = parse_double(sv.substr(colon + 1), line_no);
      if (idx <= prev) {
        throw LibsvmParseError(line_no, "nonincreasing feature indices (" +
                                            std::to_string(prev) + " then " +
                                            std::to_string(idx) + ")");
      }
      prev = idx;
      row.emplace_back(idx, val);
    }
    max_index = std::max(max_index, prev);
    data.rows.push_back(std::move(row));
    data.labels.push_back(y);
  }
  data.n_features = std::max(max_index, n_features);
  return data;
}

SparseDataset load_libsvm(const std::string& path, int n_features) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset '" + path + "'");
  return parse_libsvm(in, n_features);
}

void write_libsvm(std::ostream& out, const SparseDataset& data) {
  char buf[64];
  for (std::size_t i = 0; i < data.rows.size(); ++i) {
    out << (data.labels[i] > 0 ? "+1" : "-1");
    for (const auto& [idx, val] : data.rows[i]) {
      std::snprintf(buf, sizeof buf, "%.17g", val);
      out << ' ' << idx << ':' << buf;
    }
    out << '\n';
  }
}

void save_libsvm(const std::string& path, const SparseDataset& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset '" + path + "'");
  write_libsvm(out, data);
}

SparseDataset make_classification(std::uint64_t seed, std::size_t n_samples,
                                  int n_features, double density, double label_noise) {
  if (n_samples == 0 || n_features < 1) {
    throw std::invalid_argument("classification data needs samples and features");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<double> w(static_cast<std::size_t>(n_features));
  for (double& wi : w) wi = normal(rng);

  SparseDataset data;
  data.n_features = n_features;
  for (std::size_t i = 0; i < n_samples; ++i) {
    std::vector<SparseDataset::Entry> row;
    double margin = 0.0;
    for (int j = 1; j <= n_features; ++j) {
      if (unif(rng) < density) {
        const double v = normal(rng);
        row.emplace_back(j, v);
        margin += v * w[static_cast<std::size_t>(j - 1)];
      }
    }
    int y = margin >= 0.0 ? 1 : -1;
    if (unif(rng) < label_noise) y = -y;
    data.rows.push_back(std::move(row));
    data.labels.push_back(y);
  }
  return data;
}

}  // namespace agraal
