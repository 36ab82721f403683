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

#ifndef SEMGRAPH_TEXT_PIPELINE_HPP
#define SEMGRAPH_TEXT_PIPELINE_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "semgraph/synset.hpp"
#include "semgraph/taxonomy.hpp"
#include "semgraph/word_similarity.hpp"

namespace semgraph {

/// A content word that survived filtering. position is 1-based within the
/// filtered list; sense is set by disambiguate().
struct TaggedToken {
  std::string surface;
  std::string lemma;
  PosCategory pos = PosCategory::Noun;
  std::optional<SynsetId> sense;
  std::size_t position = 0;

  friend bool operator==(const TaggedToken &, const TaggedToken &) = default;
};

/// Function words removed before tagging.
class StopList {
 public:
  StopList() = default;
  explicit StopList(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  /// Built-in list: determiners, prepositions, conjunctions, pronouns,
  /// interjections, copula/auxiliary forms and modals.
  static StopList defaults();
  /// One entry per line; blank lines and lines starting with '#' ignored.
  static StopList from_file(const std::filesystem::path &path);

  bool contains(std::string_view word) const { return words_.contains(std::string(word)); }
  void add(std::string word) { words_.insert(std::move(word)); }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Irregular forms the suffix rules cannot reach ("bodies" is fine,
/// "women" is not).
class LemmaExceptions {
 public:
  LemmaExceptions() = default;

  static LemmaExceptions defaults();
  /// "surface<whitespace>lemma" per line; '#' comments allowed.
  static LemmaExceptions from_file(const std::filesystem::path &path);

  void add(std::string surface, std::string lemma) { map_[std::move(surface)] = std::move(lemma); }
  std::optional<std::string_view> find(std::string_view surface) const;
  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

/// Whitespace split, lowercased. Leading/trailing . ' and internal-or-edge
/// , ; : ! ? " ( ) are separators; internal hyphens and apostrophes stay.
std::vector<std::string> tokenize(std::string_view text);

/// Candidate base forms for a surface token under the fixed suffix rules,
/// most specific rule first. Does not consult the dictionary.
std::vector<std::string> suffix_candidates(std::string_view token, PosCategory pos);

/// Dictionary lemma of a token for one category, if any: exception table,
/// then suffix-rule base forms, then the surface form itself.
std::optional<std::string> lemmatize(std::string_view token, PosCategory pos,
                                     const TaxonomyIndex &index, const LemmaExceptions &exceptions);

/// Drops stopwords and everything that is not a noun or verb lemma. Noun
/// readings win over verb readings; positions are renumbered 1..n.
std::vector<TaggedToken> pos_filter(std::span<const std::string> tokens, const TaxonomyIndex &index,
                                    const StopList &stops,
                                    const LemmaExceptions &exceptions = LemmaExceptions::defaults());

/// Optional domain prior added to the disambiguation score and used to
/// break exact ties: prior(token, candidate) in [0, 1].
using SensePrior = std::function<double(const TaggedToken &, SynsetId)>;

struct WsdOptions {
  SensePrior prior;
  double prior_weight = 0.0;
};

/// Max-similarity disambiguation: each token takes the candidate sense
/// maximizing the sum, over every other token, of its best similarity to
/// that token's candidates. Ties go to the prior (when given), then to
/// sense order.
std::vector<TaggedToken> disambiguate(std::vector<TaggedToken> tokens, const PathCache &cache,
                                      const SimilarityParams &params = {},
                                      const WsdOptions &options = {});

/// Score of one candidate sense for token i, as used by disambiguate().
double wsd_score(std::span<const TaggedToken> tokens, std::size_t i, SynsetId candidate,
                 const PathCache &cache, const SimilarityParams &params);

/// tokenize -> pos_filter -> disambiguate with fixed resources.
class TextAnalyzer {
 public:
  TextAnalyzer(const PathCache &cache, StopList stops = StopList::defaults(),
               LemmaExceptions exceptions = LemmaExceptions::defaults(),
               SimilarityParams params = {}, WsdOptions wsd = {});

  std::vector<TaggedToken> analyze(std::string_view text) const;

  const TaxonomyIndex &index() const noexcept { return cache_->index(); }
  const PathCache &cache() const noexcept { return *cache_; }
  const StopList &stops() const noexcept { return stops_; }
  const LemmaExceptions &exceptions() const noexcept { return exceptions_; }
  const SimilarityParams &params() const noexcept { return params_; }
  const WsdOptions &wsd() const noexcept { return wsd_; }

 private:
  const PathCache *cache_;
  StopList stops_;
  LemmaExceptions exceptions_;
  SimilarityParams params_;
  WsdOptions wsd_;
};

}  // namespace semgraph

#endif  // SEMGRAPH_TEXT_PIPELINE_HPP
