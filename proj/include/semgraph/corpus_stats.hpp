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

#ifndef SEMGRAPH_CORPUS_STATS_HPP
#define SEMGRAPH_CORPUS_STATS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "semgraph/synset.hpp"
#include "semgraph/text_pipeline.hpp"
#include "semgraph/wordnet_store.hpp"

namespace semgraph {

inline constexpr std::string_view kSftHeader = "semgraph-sft v1";

/// How often each sense was chosen in some corpus.
class SenseFrequencyTable {
 public:
  SenseFrequencyTable() = default;
  explicit SenseFrequencyTable(std::string source) : source_(std::move(source)) {}

  void add(SynsetId id, std::uint64_t count = 1);
  std::uint64_t count(SynsetId id) const noexcept;
  std::uint64_t total() const noexcept { return total_; }
  const std::map<SynsetId, std::uint64_t> &counts() const noexcept { return counts_; }
  const std::string &source() const noexcept { return source_; }

  /// "semgraph-sft v1" then "pos:offset<TAB>count" lines sorted by id.
  void save(std::ostream &out) const;
  void save(const std::filesystem::path &path) const;
  /// Throws DatasetError naming the offending line.
  static SenseFrequencyTable load(std::istream &in, const std::string &name);
  static SenseFrequencyTable load(const std::filesystem::path &path);

 private:
  std::map<SynsetId, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  std::string source_;
};

/// Splits the text into sentences at . ! ? and line breaks, runs each
/// through the analyzer and counts every chosen sense. Sentences without
/// content tokens are skipped.
SenseFrequencyTable build_from_corpus(std::istream &corpus, const TextAnalyzer &analyzer,
                                      std::string source = "corpus");

/// Per-synset tag counts shipped with the dictionary.
SenseFrequencyTable builtin_table(const TaxonomyIndex &index);

/// Add-one smoothed share of id among the senses of (lemma, pos). Throws
/// ContractError when id is not one of them.
double sense_prior(SynsetId id, std::string_view lemma, PosCategory pos,
                   const SenseFrequencyTable &table, const TaxonomyIndex &index);

/// Adapter for WsdOptions::prior. The table and index must outlive it.
SensePrior make_prior(const SenseFrequencyTable &table, const TaxonomyIndex &index);

}  // namespace semgraph

#endif  // SEMGRAPH_CORPUS_STATS_HPP
