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

#include "semgraph/taxonomy.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "semgraph/errors.hpp"

namespace semgraph {

Closure node_closure(NodeId node, const TaxonomyIndex &index) {
  Closure out{{node, 0}};
  std::vector<NodeId> frontier{node};
  std::vector<NodeId> next;
  std::uint32_t dist = 0;
  // BFS visits nodes in nondecreasing distance, so the first visit is minimal.
  auto seen = [&out](NodeId n) {
    return std::any_of(out.begin(), out.end(), [n](const auto &e) { return e.first == n; });
  };
  while (!frontier.empty()) {
    ++dist;
    next.clear();
    for (NodeId cur : frontier) {
      for (NodeId p : index.parents(cur)) {
        if (seen(p)) continue;
        out.emplace_back(p, dist);
        next.push_back(p);
      }
    }
    frontier.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PathResult shortest_path(const Closure &a, const Closure &b, const TaxonomyIndex &index) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t best_len = kNone;
  std::uint32_t best_depth = 0;
  NodeId best = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      const NodeId c = ia->first;
      const std::uint32_t len = ia->second + ib->second;
      const std::uint32_t d = index.depth(c);
      if (len < best_len || (len == best_len && d > best_depth) ||
          (len == best_len && d == best_depth && index.id_of(c) < index.id_of(best))) {
        best_len = len;
        best_depth = d;
        best = c;
      }
      ++ia;
      ++ib;
    }
  }
  if (best_len == kNone) throw ContractError("synsets share no common hypernym");
  return {best_len, index.id_of(best), best_depth};
}

std::shared_ptr<const Closure> PathCache::closure(NodeId node) const {
  {
    std::shared_lock lock(closures_mutex_);
    if (auto it = closures_.find(node); it != closures_.end()) return it->second;
  }
  auto computed = std::make_shared<const Closure>(node_closure(node, *index_));
  std::unique_lock lock(closures_mutex_);
  return closures_.try_emplace(node, std::move(computed)).first->second;
}

PathResult PathCache::path(NodeId a, NodeId b) const {
  // The result does not depend on argument order, so one key serves both.
  const std::uint64_t key = a < b ? (std::uint64_t{a} << 32 | b) : (std::uint64_t{b} << 32 | a);
  {
    std::shared_lock lock(pairs_mutex_);
    if (auto it = pairs_.find(key); it != pairs_.end()) return it->second;
  }
  auto result = shortest_path(*closure(a), *closure(b), *index_);
  std::unique_lock lock(pairs_mutex_);
  pairs_.try_emplace(key, result);
  return result;
}

std::size_t PathCache::cached_pairs() const {
  std::shared_lock lock(pairs_mutex_);
  return pairs_.size();
}

namespace {

void require_same_pos(SynsetId a, SynsetId b) {
  if (a.pos != b.pos)
    throw ContractError("shortest_path across categories: " + to_string(a) + " / " + to_string(b));
}

}  // namespace

PathResult shortest_path(SynsetId a, SynsetId b, const TaxonomyIndex &index) {
  const NodeId na = index.node(a);
  const NodeId nb = index.node(b);
  require_same_pos(a, b);
  return shortest_path(node_closure(na, index), node_closure(nb, index), index);
}

PathResult shortest_path(SynsetId a, SynsetId b, const PathCache &cache) {
  const NodeId na = cache.index().node(a);
  const NodeId nb = cache.index().node(b);
  require_same_pos(a, b);
  return cache.path(na, nb);
}

std::uint32_t depth(SynsetId id, const TaxonomyIndex &index) { return index.depth(index.node(id)); }

std::map<SynsetId, std::uint32_t> hypernym_closure(SynsetId id, const TaxonomyIndex &index) {
  std::map<SynsetId, std::uint32_t> out;
  for (auto [node, dist] : node_closure(index.node(id), index)) out.emplace(index.id_of(node), dist);
  return out;
}

}  // namespace semgraph
