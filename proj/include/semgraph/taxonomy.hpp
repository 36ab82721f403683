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

#ifndef SEMGRAPH_TAXONOMY_HPP
#define SEMGRAPH_TAXONOMY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semgraph/synset.hpp"
#include "semgraph/wordnet_store.hpp"

namespace semgraph {

/// Result of climbing the hypernym lattice from two synsets.
struct PathResult {
  std::uint32_t length = 0;  ///< hypernym edges a -> subsumer -> b
  SynsetId subsumer;
  std::uint32_t subsumer_depth = 0;

  friend bool operator==(const PathResult &, const PathResult &) = default;
};

/// Ancestors of a node (itself included) with their minimum hypernym
/// distance, sorted by NodeId.
using Closure = std::vector<std::pair<NodeId, std::uint32_t>>;

Closure node_closure(NodeId node, const TaxonomyIndex &index);

/// Shortest path through a common hypernym of two nodes of one category.
/// Among ancestors minimizing the length, the deepest one wins; remaining
/// ties go to the smallest (pos, offset).
PathResult shortest_path(const Closure &a, const Closure &b, const TaxonomyIndex &index);

/// Thread-safe memo of closures and pairwise results for one index.
/// Cached answers are identical to uncached ones.
class PathCache {
 public:
  explicit PathCache(const TaxonomyIndex &index) : index_(&index) {}

  const TaxonomyIndex &index() const noexcept { return *index_; }

  std::shared_ptr<const Closure> closure(NodeId node) const;
  PathResult path(NodeId a, NodeId b) const;

  std::size_t cached_pairs() const;

 private:
  const TaxonomyIndex *index_;
  mutable std::shared_mutex closures_mutex_;
  mutable std::unordered_map<NodeId, std::shared_ptr<const Closure>> closures_;
  mutable std::shared_mutex pairs_mutex_;
  mutable std::unordered_map<std::uint64_t, PathResult> pairs_;
};

/// l, subsumer and h for two synsets of the same category. Throws
/// LookupError for unknown ids and ContractError across categories.
PathResult shortest_path(SynsetId a, SynsetId b, const TaxonomyIndex &index);
PathResult shortest_path(SynsetId a, SynsetId b, const PathCache &cache);

/// Minimum hypernym-edge count to the synthetic root (root itself: 0).
std::uint32_t depth(SynsetId id, const TaxonomyIndex &index);

/// Every ancestor reachable over hypernym edges, with minimum distance.
std::map<SynsetId, std::uint32_t> hypernym_closure(SynsetId id, const TaxonomyIndex &index);

}  // namespace semgraph

#endif  // SEMGRAPH_TAXONOMY_HPP
