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

#ifndef AGRAAL_LIBSVM_HPP
#define AGRAAL_LIBSVM_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agraal {

/// Binary-labelled sparse samples. Feature indices are 1-based and strictly
/// increasing within a row; labels are -1 or +1.
struct SparseDataset {
  using Entry = std::pair<int, double>;

  std::vector<std::vector<Entry>> rows;
  std::vector<int> labels;
  int n_features = 0;

  std::size_t n_samples() const { return rows.size(); }
  std::size_t nnz() const;

  /// Throws std::invalid_argument naming the offending row.
  void validate() const;
};

class LibsvmParseError : public std::runtime_error {
 public:
  LibsvmParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses "label idx:val idx:val ..." lines. Text after '#' is ignored,
/// blank lines are skipped, labels {0,-1} map to -1 and {1,+1} to +1.
/// n_features is the largest index seen unless `n_features` is larger.
SparseDataset parse_libsvm(std::istream& in, int n_features = 0);
SparseDataset load_libsvm(const std::string& path, int n_features = 0);

/// Values are written with 17 significant digits so a reload is exact.
void write_libsvm(std::ostream& out, const SparseDataset& data);
void save_libsvm(const std::string& path, const SparseDataset& data);

/// Seeded synthetic classification data: Gaussian features kept with
/// probability `density`, labels from a random linear model with
/// `label_noise` flip probability.
SparseDataset make_classification(std::uint64_t seed, std::size_t n_samples,
                                  int n_features, double density, double label_noise);

}  // namespace agraal

#endif  // AGRAAL_LIBSVM_HPP
