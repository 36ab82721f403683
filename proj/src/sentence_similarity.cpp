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

#include "semgraph/sentence_similarity.hpp"

#include <algorithm>
#include <cmath>

#include "semgraph/errors.hpp"

namespace semgraph {

void ZetaParams::validate() const {
  if (!(gamma > 0.0)) throw ContractError("gamma must be positive");
  if (!(benchmark_threshold > 0.0 && benchmark_threshold < 1.0))
    throw ContractError("threshold must lie in (0, 1)");
}

namespace {

std::vector<double> best_against(std::span<const TaggedToken> from,
                                 std::span<const TaggedToken> other, std::size_t n,
                                 const PathCache &cache, const SimilarityParams &params) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!from[i].sense) throw ContractError("token '" + from[i].lemma + "' has no sense");
    double best = 0.0;
    for (const auto &t : other) {
      if (!t.sense) throw ContractError("token '" + t.lemma + "' has no sense");
      best = std::max(best, synset_similarity(*from[i].sense, *t.sense, cache, params));
    }
    out[i] = best;
  }
  return out;
}

}  // namespace

std::pair<SemanticVector, SemanticVector> build_semantic_vectors(
    std::span<const TaggedToken> t1, std::span<const TaggedToken> t2, const PathCache &cache,
    const SimilarityParams &params) {
  if (t1.empty() || t2.empty()) throw DegenerateInputError("no content tokens");
  const std::size_t n = std::max(t1.size(), t2.size());
  return {{best_against(t1, t2, n, cache, params), "S1"},
          {best_against(t2, t1, n, cache, params), "S2"}};
}

ZetaTerms zeta_terms(std::span<const double> v1, std::span<const double> v2,
                     const ZetaParams &params) {
  params.validate();
  if (v1.size() != v2.size() || v1.empty())
    throw ContractError("zeta needs two non-empty vectors of equal length");
  auto above = [&](std::span<const double> v) {
    return static_cast<std::size_t>(std::count_if(
        v.begin(), v.end(), [&](double x) { return x > params.benchmark_threshold; }));
  };
  ZetaTerms t;
  t.c1 = above(v1);
  t.c2 = above(v2);
  if (t.c1 + t.c2 == 0) {
    t.fallback = true;
    t.zeta = static_cast<double>(v1.size()) / 2.0;
  } else {
    t.zeta = static_cast<double>(t.c1 + t.c2) / params.gamma;
  }
  return t;
}

double zeta(std::span<const double> v1, std::span<const double> v2, const ZetaParams &params) {
  return zeta_terms(v1, v2, params).zeta;
}

double euclidean_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

VectorScore score_vectors(std::span<const double> v1, std::span<const double> v2,
                          const ZetaParams &params) {
  VectorScore out;
  out.terms = zeta_terms(v1, v2, params);
  out.s = euclidean_norm(v1) * euclidean_norm(v2);
  out.raw = out.s / out.terms.zeta;
  out.sim = std::clamp(out.raw, 0.0, 1.0);
  return out;
}

std::pair<std::vector<double>, std::vector<double>> build_order_vectors(
    std::span<const std::string> t1, std::span<const std::string> t2) {
  if (t1.empty() || t2.empty()) throw ContractError("word order needs non-empty token lists");
  // The longer sentence supplies the reference indices.
  if (t2.size() > t1.size()) std::swap(t1, t2);
  const std::size_t n = std::max(t1.size(), t2.size());
  std::vector<double> v1(n), v2(n);
  for (std::size_t i = 0; i < n; ++i) {
    v1[i] = static_cast<double>(i + 1);
    v2[i] = static_cast<double>(i + 1);
    if (i >= t2.size()) continue;
    auto it = std::find(t1.begin(), t1.end(), t2[i]);
    if (it != t1.end()) v2[i] = static_cast<double>(it - t1.begin() + 1);
  }
  return {std::move(v1), std::move(v2)};
}

double word_order_similarity(std::span<const double> v1, std::span<const double> v2) {
  if (v1.empty() || v1.size() != v2.size())
    throw ContractError("word order needs two non-empty vectors of equal length");
  double diff = 0.0, prod = 0.0;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    diff += (v1[i] - v2[i]) * (v1[i] - v2[i]);
    prod += (v1[i] * v2[i]) * (v1[i] * v2[i]);
  }
  return std::sqrt(diff) / std::sqrt(prod);
}

double word_order_similarity(std::span<const std::string> t1, std::span<const std::string> t2) {
  auto [v1, v2] = build_order_vectors(t1, t2);
  return word_order_similarity(v1, v2);
}

SentenceComparator::SentenceComparator(TextAnalyzer analyzer, ZetaParams zeta, OrderOptions order)
    : analyzer_(std::move(analyzer)), zeta_(zeta), order_(order) {
  zeta_.validate();
}

SentenceAnalysis SentenceComparator::analyze(std::string_view s1, std::string_view s2) const {
  SentenceAnalysis out;
  out.tokens1 = analyzer_.analyze(s1);
  out.tokens2 = analyzer_.analyze(s2);
  auto [v1, v2] = build_semantic_vectors(out.tokens1, out.tokens2, analyzer_.cache(),
                                         analyzer_.params());
  out.v1 = std::move(v1);
  out.v2 = std::move(v2);
  out.score = score_vectors(out.v1.values, out.v2.values, zeta_);
  out.similarity = out.score.sim;
  if (order_.enabled) {
    auto words1 = tokenize(s1);
    auto words2 = tokenize(s2);
    if (words1.empty() || words2.empty()) throw DegenerateInputError("no content tokens");
    out.word_order = word_order_similarity(words1, words2);
    out.similarity = std::clamp(out.similarity * (1.0 - *out.word_order), 0.0, 1.0);
  }
  return out;
}

double sentence_similarity(std::string_view s1, std::string_view s2, const PathCache &cache,
                           const SimilarityParams &params, const ZetaParams &zeta,
                           const OrderOptions &order) {
  TextAnalyzer analyzer(cache, StopList::defaults(), LemmaExceptions::defaults(), params);
  return SentenceComparator(std::move(analyzer), zeta, order).similarity(s1, s2);
}

}  // namespace semgraph
