// Copyright 2026 The semgraph Authors.
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

#ifndef SEMGRAPH_BENCHMARK_HPP
#define SEMGRAPH_BENCHMARK_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semgraph/sentence_similarity.hpp"
#include "semgraph/word_similarity.hpp"

namespace semgraph {

struct BenchmarkPair {
  int id = 0;
  std::string item1;
  std::string item2;
  double reference = 0.0;
  std::optional<double> published;
};

/// TSV with header "id\titem1\titem2\treference\tpublished". Throws
/// DatasetError with the line number of the first bad row.
std::vector<BenchmarkPair> load_dataset(std::istream &in, const std::string &name);
std::vector<BenchmarkPair> load_dataset(const std::filesystem::path &path);

/// Sample Pearson correlation. Throws ContractError on length mismatch,
/// fewer than two points or zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
};

/// Ordinary least squares of ys on xs with the standard error of the slope.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

struct PairResult {
  int id = 0;
  std::string item1;
  std::string item2;
  double reference = 0.0;
  std::optional<double> published;
  double score = 0.0;
  bool excluded = false;
  std::string note;  ///< "oov", "no content tokens", ...
};

struct EvalReport {
  std::string kind;
  std::vector<PairResult> pairs;
  double pearson_r = 0.0;
  LinearFit fit;
  std::vector<int> excluded_ids;

  std::size_t included() const;
  void print_table(std::ostream &out) const;
  /// pairs[], pearson_r, slope, intercept, stderr, excluded_ids.
  std::string to_json(int indent = 2) const;
};

/// Pairs left out of the sentence correlation unless overridden.
inline const std::set<int> kDefaultSentenceExclusions{17, 24, 30, 33, 39};

/// Noun word similarity, max over senses; unknown words score 0 and are
/// marked "oov".
EvalReport run_word_benchmark(std::span<const BenchmarkPair> dataset, const PathCache &cache,
                              const SimilarityParams &params = {});

/// Sentence similarity per pair; excluded ids are scored but left out of the
/// statistics. threads <= 1 runs serially.
EvalReport run_sentence_benchmark(std::span<const BenchmarkPair> dataset,
                                  const SentenceComparator &comparator,
                                  const std::set<int> &exclusions = kDefaultSentenceExclusions,
                                  unsigned threads = 1);

}  // namespace semgraph

#endif  // SEMGRAPH_BENCHMARK_HPP
