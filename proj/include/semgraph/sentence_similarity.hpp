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

#ifndef SEMGRAPH_SENTENCE_SIMILARITY_HPP
#define SEMGRAPH_SENTENCE_SIMILARITY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semgraph/text_pipeline.hpp"
#include "semgraph/word_similarity.hpp"

namespace semgraph {

struct SemanticVector {
  std::vector<double> values;
  std::string label;
};

struct ZetaParams {
  double gamma = 1.8;
  double benchmark_threshold = 0.8025;

  void validate() const;
};

struct ZetaTerms {
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  double zeta = 0.0;
  bool fallback = false;  ///< no cell above threshold; zeta = n / 2
};

/// Each token's best similarity against the other sentence's fixed senses,
/// padded with zeros to max(|t1|, |t2|). Throws DegenerateInputError when
/// either side is empty.
std::pair<SemanticVector, SemanticVector> build_semantic_vectors(
    std::span<const TaggedToken> t1, std::span<const TaggedToken> t2, const PathCache &cache,
    const SimilarityParams &params = {});

/// Counts of cells strictly above the threshold and the resulting normalizer.
ZetaTerms zeta_terms(std::span<const double> v1, std::span<const double> v2,
                     const ZetaParams &params = {});
double zeta(std::span<const double> v1, std::span<const double> v2, const ZetaParams &params = {});

double euclidean_norm(std::span<const double> v);

struct VectorScore {
  double s = 0.0;    ///< |V1| * |V2|
  ZetaTerms terms;
  double raw = 0.0;  ///< s / zeta, unclamped
  double sim = 0.0;  ///< raw clamped to [0, 1]
};

/// S, zeta and Sim for two equal-length vectors.
VectorScore score_vectors(std::span<const double> v1, std::span<const double> v2,
                          const ZetaParams &params = {});

/// Order vectors over the longer sentence: V1 = 1..n; V2[i] is the index in
/// the longer sentence of the shorter one's i-th word, or i + 1 when there
/// is no identical word (or no i-th word).
std::pair<std::vector<double>, std::vector<double>> build_order_vectors(
    std::span<const std::string> t1, std::span<const std::string> t2);

/// |V1 - V2| / |V1 * V2| (elementwise product). Throws ContractError on
/// empty input.
double word_order_similarity(std::span<const double> v1, std::span<const double> v2);
double word_order_similarity(std::span<const std::string> t1, std::span<const std::string> t2);

struct OrderOptions {
  bool enabled = false;
};

struct SentenceAnalysis {
  std::vector<TaggedToken> tokens1;
  std::vector<TaggedToken> tokens2;
  SemanticVector v1;
  SemanticVector v2;
  VectorScore score;
  std::optional<double> word_order;  ///< W_s, when enabled
  double similarity = 0.0;           ///< final score in [0, 1]
};

/// Full sentence pipeline with reusable resources.
class SentenceComparator {
 public:
  explicit SentenceComparator(TextAnalyzer analyzer, ZetaParams zeta = {}, OrderOptions order = {});

  SentenceAnalysis analyze(std::string_view s1, std::string_view s2) const;
  double similarity(std::string_view s1, std::string_view s2) const {
    return analyze(s1, s2).similarity;
  }

  const TextAnalyzer &analyzer() const noexcept { return analyzer_; }
  const ZetaParams &zeta_params() const noexcept { return zeta_; }

 private:
  TextAnalyzer analyzer_;
  ZetaParams zeta_;
  OrderOptions order_;
};

double sentence_similarity(std::string_view s1, std::string_view s2, const PathCache &cache,
                           const SimilarityParams &params = {}, const ZetaParams &zeta = {},
                           const OrderOptions &order = {});

}  // namespace semgraph

#endif  // SEMGRAPH_SENTENCE_SIMILARITY_HPP
