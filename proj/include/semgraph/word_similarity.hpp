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

#ifndef SEMGRAPH_WORD_SIMILARITY_HPP
#define SEMGRAPH_WORD_SIMILARITY_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "semgraph/synset.hpp"
#include "semgraph/taxonomy.hpp"

namespace semgraph {

/// Constants of the edge-based measure: path decay alpha and depth
/// scaling beta.
struct SimilarityParams {
  double alpha = 0.2;
  double beta = 0.45;

  /// Throws ContractError unless both are positive.
  void validate() const;
};

/// exp(-alpha * l)
double path_factor(std::uint32_t length, const SimilarityParams &params = {});

/// tanh(beta * h), written as (e^bh - e^-bh) / (e^bh + e^-bh).
double depth_factor(std::uint32_t depth, const SimilarityParams &params = {});

/// path_factor(l) * depth_factor(h) for an already computed path.
inline double path_similarity(const PathResult &path, const SimilarityParams &params = {}) {
  return path_factor(path.length, params) * depth_factor(path.subsumer_depth, params);
}

/// 0 across categories (and for adjectives/adverbs), else f(l) * g(h).
double synset_similarity(SynsetId a, SynsetId b, const TaxonomyIndex &index,
                         const SimilarityParams &params = {});
double synset_similarity(SynsetId a, SynsetId b, const PathCache &cache,
                         const SimilarityParams &params = {});

/// Best-scoring sense pair of two words.
struct WordMatch {
  double score = 0.0;
  std::optional<SynsetId> sense1;
  std::optional<SynsetId> sense2;
  std::optional<PathResult> path;  ///< unset when the pair is cross-category
};

/// Max over all sense pairs; 0 when either word is unknown. Ties keep the
/// earliest pair in sense order.
WordMatch best_word_match(std::string_view w1, PosCategory pos1, std::string_view w2,
                          PosCategory pos2, const PathCache &cache,
                          const SimilarityParams &params = {});

double word_similarity(std::string_view w1, std::string_view w2, PosCategory pos1, PosCategory pos2,
                       const TaxonomyIndex &index, const SimilarityParams &params = {});
double word_similarity(std::string_view w1, std::string_view w2, PosCategory pos1, PosCategory pos2,
                       const PathCache &cache, const SimilarityParams &params = {});

}  // namespace semgraph

#endif  // SEMGRAPH_WORD_SIMILARITY_HPP
