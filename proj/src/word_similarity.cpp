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

#include "semgraph/word_similarity.hpp"

#include <cmath>

#include "semgraph/errors.hpp"

namespace semgraph {

void SimilarityParams::validate() const {
  if (!(alpha > 0.0)) throw ContractError("alpha must be positive");
  if (!(beta > 0.0)) throw ContractError("beta must be positive");
}

double path_factor(std::uint32_t length, const SimilarityParams &params) {
  return std::exp(-params.alpha * static_cast<double>(length));
}

double depth_factor(std::uint32_t depth, const SimilarityParams &params) {
  return std::tanh(params.beta * static_cast<double>(depth));
}

namespace {

bool comparable(SynsetId a, SynsetId b) { return a.pos == b.pos && is_similarity_pos(a.pos); }

}  // namespace

double synset_similarity(SynsetId a, SynsetId b, const TaxonomyIndex &index,
                         const SimilarityParams &params) {
  (void)index.node(a);
  (void)index.node(b);
  if (!comparable(a, b)) return 0.0;
  return path_similarity(shortest_path(a, b, index), params);
}

double synset_similarity(SynsetId a, SynsetId b, const PathCache &cache,
                         const SimilarityParams &params) {
  const NodeId na = cache.index().node(a);
  const NodeId nb = cache.index().node(b);
  if (!comparable(a, b)) return 0.0;
  return path_similarity(cache.path(na, nb), params);
}

WordMatch best_word_match(std::string_view w1, PosCategory pos1, std::string_view w2,
                          PosCategory pos2, const PathCache &cache,
                          const SimilarityParams &params) {
  const auto &index = cache.index();
  WordMatch best;
  auto s1 = index.senses(w1, pos1);
  auto s2 = index.senses(w2, pos2);
  if (s1.empty() || s2.empty()) return best;
  best.sense1 = s1.front();
  best.sense2 = s2.front();
  if (!comparable(s1.front(), s2.front())) return best;
  bool first = true;
  for (SynsetId a : s1) {
    for (SynsetId b : s2) {
      auto path = cache.path(index.node(a), index.node(b));
      double score = path_similarity(path, params);
      if (first || score > best.score) {
        best = {score, a, b, path};
        first = false;
      }
    }
  }
  return best;
}

double word_similarity(std::string_view w1, std::string_view w2, PosCategory pos1, PosCategory pos2,
                       const PathCache &cache, const SimilarityParams &params) {
  return best_word_match(w1, pos1, w2, pos2, cache, params).score;
}

double word_similarity(std::string_view w1, std::string_view w2, PosCategory pos1, PosCategory pos2,
                       const TaxonomyIndex &index, const SimilarityParams &params) {
  PathCache cache(index);
  return word_similarity(w1, w2, pos1, pos2, cache, params);
}

}  // namespace semgraph
