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

#ifndef SEMGRAPH_WORDNET_STORE_HPP
#define SEMGRAPH_WORDNET_STORE_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semgraph/synset.hpp"

namespace semgraph {

/// Dense handle of a node inside one TaxonomyIndex.
using NodeId = std::uint32_t;

inline constexpr std::string_view kVirtualRootGloss = "synthetic root";
inline constexpr std::string_view kEnvDictDir = "SEMGRAPH_WN_DIR";

/// Lowercases and replaces spaces with underscores. No stemming.
std::string normalize_lemma(std::string_view lemma);

class TaxonomyBuilder;

/// Immutable in-memory lexical taxonomy: every synset of the loaded
/// categories, the lemma -> senses index and the hypernym lattice with a
/// synthetic root per category. Safe for concurrent reads once built.
class TaxonomyIndex {
 public:
  TaxonomyIndex() = default;

  /// Real synsets, excluding the synthetic roots.
  std::size_t synset_count() const noexcept { return nodes_.size() - root_count_; }
  std::size_t synset_count(PosCategory pos) const noexcept;
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t virtual_root_count() const noexcept { return root_count_; }

  bool has_pos(PosCategory pos) const noexcept;
  bool contains(SynsetId id) const noexcept { return id_to_node_.contains(id); }

  /// Throws LookupError for unknown ids.
  const Synset &synset(SynsetId id) const;
  const Synset &synset(NodeId node) const { return nodes_[node]; }

  /// Sense-ordered synsets of a lemma (sense 1 first); empty when unknown.
  /// The lemma is normalized internally.
  std::span<const SynsetId> senses(std::string_view lemma, PosCategory pos) const;
  /// Corpus tag count of each entry of senses(lemma, pos), same order.
  std::span<const std::uint32_t> sense_tag_counts(std::string_view lemma, PosCategory pos) const;
  /// Sum of sense_tag_counts(lemma, pos).
  std::uint64_t lemma_tag_count(std::string_view lemma, PosCategory pos) const;
  bool has_lemma(std::string_view lemma, PosCategory pos) const { return !senses(lemma, pos).empty(); }

  SynsetId virtual_root(PosCategory pos) const noexcept { return SynsetId::virtual_root(pos); }

  std::optional<NodeId> find_node(SynsetId id) const noexcept;
  /// Throws LookupError for unknown ids.
  NodeId node(SynsetId id) const;
  SynsetId id_of(NodeId node) const noexcept { return nodes_[node].id; }

  /// Hypernym and instance-hypernym targets; a category root's only parent
  /// is the synthetic root, which itself has none.
  std::span<const NodeId> parents(NodeId node) const noexcept {
    return {parent_targets_.data() + parent_offsets_[node],
            parent_targets_.data() + parent_offsets_[node + 1]};
  }
  std::span<const NodeId> children(NodeId node) const noexcept {
    return {child_targets_.data() + child_offsets_[node],
            child_targets_.data() + child_offsets_[node + 1]};
  }

  /// Minimum number of hypernym edges up to the synthetic root.
  std::uint32_t depth(NodeId node) const noexcept { return depths_[node]; }

  std::span<const Synset> nodes() const noexcept { return nodes_; }

 private:
  friend class TaxonomyBuilder;

  struct LemmaEntry {
    std::vector<SynsetId> senses;
    std::vector<std::uint32_t> tag_counts;
  };
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  using LemmaMap = std::unordered_map<std::string, LemmaEntry, StringHash, std::equal_to<>>;

  const LemmaEntry *find_lemma(std::string_view lemma, PosCategory pos) const;

  std::vector<Synset> nodes_;
  std::size_t root_count_ = 0;
  std::array<bool, kPosCount> loaded_{};
  std::array<std::size_t, kPosCount> per_pos_count_{};
  std::unordered_map<SynsetId, NodeId> id_to_node_;
  std::array<LemmaMap, kPosCount> lemmas_;
  std::vector<std::uint32_t> parent_offsets_{0};
  std::vector<NodeId> parent_targets_;
  std::vector<std::uint32_t> child_offsets_{0};
  std::vector<NodeId> child_targets_;
  std::vector<std::uint32_t> depths_;
};

/// Assembles a TaxonomyIndex from parsed records or hand-made fixtures.
/// build() resolves pointers, attaches the synthetic roots and computes
/// depths; it throws ConsistencyError on dangling references.
class TaxonomyBuilder {
 public:
  /// Marks a category as present even if no synset is added for it.
  void declare_pos(PosCategory pos) { loaded_[static_cast<std::size_t>(pos)] = true; }

  void add_synset(Synset synset);
  /// Sense list of one lemma; tag_counts may be empty (all zero).
  void add_lemma(std::string_view lemma, PosCategory pos, std::vector<SynsetId> senses,
                 std::vector<std::uint32_t> tag_counts = {});
  /// Adds a per-sense corpus count for (lemma, synset).
  void add_sense_count(std::string_view lemma, SynsetId synset, std::uint32_t count);

  TaxonomyIndex build() &&;

 private:
  std::array<bool, kPosCount> loaded_{};
  std::vector<Synset> synsets_;
  std::array<TaxonomyIndex::LemmaMap, kPosCount> lemmas_;
  std::unordered_map<std::string, std::uint32_t> sense_counts_;  // "lemma\tpos:offset"
};

/// Parses a WordNet 3.0 "dict" directory. index.noun/data.noun are
/// required; every other category is loaded when both of its files exist.
/// index.sense, when present, supplies tag counts.
TaxonomyIndex load_database(const std::filesystem::path &dict_dir);

/// Value of SEMGRAPH_WN_DIR, if set and non-empty.
std::optional<std::filesystem::path> default_dict_dir();

std::vector<SynsetId> synsets_for(std::string_view lemma, PosCategory pos,
                                  const TaxonomyIndex &index);

/// Stored gloss verbatim; kVirtualRootGloss for synthetic roots.
const std::string &gloss_of(SynsetId id, const TaxonomyIndex &index);

/// "lemma.pos.NN" naming: the NN-th sense of the lemma. Used for traces and
/// tests ("bank.n.09").
std::optional<SynsetId> resolve_sense_name(std::string_view name, const TaxonomyIndex &index);
/// Inverse of resolve_sense_name using the synset's first lemma.
std::string sense_name(SynsetId id, const TaxonomyIndex &index);

/// Hypernym edges a->b whose hyponym inverse b->a is absent (and likewise
/// for instance pointers), checked over the given sample.
std::vector<std::pair<SynsetId, SynsetId>> pointer_symmetry_violations(
    const TaxonomyIndex &index, std::span<const SynsetId> sample);

/// First four header fields of a data-file record, formatted the way the
/// dictionary prints them ("09411430 17 n 01").
std::string format_record_header(const Synset &synset);

}  // namespace semgraph

#endif  // SEMGRAPH_WORDNET_STORE_HPP
