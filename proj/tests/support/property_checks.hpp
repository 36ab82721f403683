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

// Randomized property checks shared by the unit suite and the acceptance
// runner. Every check compares the library against a naive oracle written
// independently here (recursive path enumeration, exhaustive argmax).

#ifndef SEMGRAPH_TESTS_PROPERTY_CHECKS_HPP
#define SEMGRAPH_TESTS_PROPERTY_CHECKS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "semgraph/benchmark.hpp"
#include "semgraph/corpus_stats.hpp"
#include "semgraph/sentence_similarity.hpp"
#include "semgraph/taxonomy.hpp"
#include "semgraph/text_pipeline.hpp"
#include "semgraph/word_similarity.hpp"
#include "semgraph/wordnet_store.hpp"

namespace semgraph::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string &what) {
    if (failures++ == 0) first_failure = what;
  }
};

// ------------------------------------------------------- random taxonomy

struct RandomTaxonomy {
  TaxonomyIndex index;
  std::vector<SynsetId> ids;                       // local index -> id
  std::vector<std::vector<std::size_t>> parents;   // local index -> parents
  std::map<SynsetId, std::size_t> local;           // id -> local index
  std::vector<std::pair<std::string, std::vector<SynsetId>>> words;  // noun words
};

/// n_nouns noun synsets and a handful of verbs wired into a random DAG
/// (each synset gets 0-2 parents among earlier ones of its category), plus
/// n_words noun lemmas with 1-3 senses each.
inline RandomTaxonomy random_taxonomy(std::mt19937_64 &rng, std::size_t n_nouns,
                                      std::size_t n_words) {
  RandomTaxonomy t;
  TaxonomyBuilder b;
  b.declare_pos(PosCategory::Noun);
  b.declare_pos(PosCategory::Verb);
  const std::size_t n_verbs = std::max<std::size_t>(1, n_nouns / 5);
  auto add_category = [&](PosCategory pos, std::size_t count) {
    const std::size_t first = t.ids.size();
    for (std::size_t i = 0; i < count; ++i) {
      SynsetId id{pos, static_cast<std::uint32_t>(100 * (first + i + 1))};
      std::vector<std::size_t> ps;
      if (i > 0) {
        std::uniform_int_distribution<int> k_dist(0, 2);
        std::uniform_int_distribution<std::size_t> p_dist(first, first + i - 1);
        for (int k = k_dist(rng); k > 0; --k) {
          auto p = p_dist(rng);
          if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
        }
      }
      Synset s;
      s.id = id;
      s.ss_type = pos_code(pos);
      s.lemmas = {"s" + std::to_string(first + i)};
      s.gloss = "random synset";
      for (auto p : ps) s.pointers.push_back({PointerKind::Hypernym, "@", t.ids[p], 0});
      t.local[id] = t.ids.size();
      t.ids.push_back(id);
      t.parents.push_back(ps);
      b.add_synset(s);
      b.add_lemma(s.lemmas.front(), pos, {id});
    }
  };
  add_category(PosCategory::Noun, n_nouns);
  add_category(PosCategory::Verb, n_verbs);

  std::uniform_int_distribution<std::size_t> noun_dist(0, n_nouns - 1);
  std::uniform_int_distribution<int> sense_count(1, 3);
  for (std::size_t w = 0; w < n_words; ++w) {
    std::vector<SynsetId> senses;
    for (int k = sense_count(rng); k > 0; --k) {
      auto id = t.ids[noun_dist(rng)];
      if (std::find(senses.begin(), senses.end(), id) == senses.end()) senses.push_back(id);
    }
    std::string lemma = "w" + std::to_string(w);
    b.add_lemma(lemma, PosCategory::Noun, senses);
    t.words.emplace_back(lemma, senses);
  }
  t.index = std::move(b).build();
  return t;
}

// ---------------------------------------------------------------- oracles

/// Minimum distance from a synset to every ancestor, by enumerating every
/// upward path recursively. The synthetic root is reported under
/// SynsetId::virtual_root.
inline std::map<SynsetId, std::uint32_t> oracle_ancestors(const RandomTaxonomy &t, std::size_t i) {
  std::map<SynsetId, std::uint32_t> out;
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t n, std::uint32_t d) {
    auto [it, inserted] = out.try_emplace(t.ids[n], d);
    if (!inserted) it->second = std::min(it->second, d);
    if (t.parents[n].empty()) {
      auto root = SynsetId::virtual_root(t.ids[n].pos);
      auto [r, ins] = out.try_emplace(root, d + 1);
      if (!ins) r->second = std::min(r->second, d + 1);
    }
    for (auto p : t.parents[n]) walk(p, d + 1);
  };
  walk(i, 0);
  return out;
}

inline std::uint32_t oracle_depth(const RandomTaxonomy &t, SynsetId id) {
  if (id.is_virtual_root()) return 0;
  const auto &ps = t.parents[t.local.at(id)];
  if (ps.empty()) return 1;
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (auto p : ps) best = std::min(best, oracle_depth(t, t.ids[p]));
  return best + 1;
}

inline PathResult oracle_path(const RandomTaxonomy &t, SynsetId a, SynsetId b) {
  auto ca = oracle_ancestors(t, t.local.at(a));
  auto cb = oracle_ancestors(t, t.local.at(b));
  PathResult best{std::numeric_limits<std::uint32_t>::max(), {}, 0};
  for (const auto &[c, da] : ca) {
    auto it = cb.find(c);
    if (it == cb.end()) continue;
    const std::uint32_t l = da + it->second;
    const std::uint32_t h = oracle_depth(t, c);
    bool better = l < best.length || (l == best.length && h > best.subsumer_depth) ||
                  (l == best.length && h == best.subsumer_depth && c < best.subsumer);
    if (better) best = {l, c, h};
  }
  return best;
}

inline double oracle_similarity(const RandomTaxonomy &t, SynsetId a, SynsetId b,
                                const SimilarityParams &p = {}) {
  if (a.pos != b.pos) return 0.0;
  auto r = oracle_path(t, a, b);
  return std::exp(-p.alpha * r.length) * std::tanh(p.beta * r.subsumer_depth);
}

inline std::string describe(const PathResult &r) {
  std::ostringstream s;
  s << "(l=" << r.length << ", subsumer=" << to_string(r.subsumer) << ", h=" << r.subsumer_depth
    << ")";
  return s.str();
}

// ---------------------------------------------------------------- checks

inline PropertyResult check_shortest_path_bruteforce(std::uint64_t seed, std::size_t taxonomies) {
  PropertyResult r{"shortest path vs brute-force path enumeration"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(2, 40);
  for (std::size_t k = 0; k < taxonomies; ++k) {
    auto t = random_taxonomy(rng, size_dist(rng), 4);
    PathCache cache(t.index);
    for (std::size_t i = 0; i < t.ids.size(); ++i) {
      if (t.index.depth(t.index.node(t.ids[i])) != oracle_depth(t, t.ids[i]))
        r.fail("depth of " + to_string(t.ids[i]));
      for (std::size_t j = 0; j < t.ids.size(); ++j) {
        if (t.ids[i].pos != t.ids[j].pos) continue;
        ++r.cases;
        auto got = shortest_path(t.ids[i], t.ids[j], cache);
        auto want = oracle_path(t, t.ids[i], t.ids[j]);
        if (!(got == want))
          r.fail(to_string(t.ids[i]) + " / " + to_string(t.ids[j]) + ": got " + describe(got) +
                 ", want " + describe(want));
      }
    }
  }
  return r;
}

inline PropertyResult check_similarity_symmetry_range(std::uint64_t seed, std::size_t pairs) {
  PropertyResult r{"similarity symmetry and range"};
  std::mt19937_64 rng(seed);
  auto t = random_taxonomy(rng, 45, 10);
  PathCache cache(t.index);
  std::uniform_int_distribution<std::size_t> pick(0, t.ids.size() - 1);
  std::uniform_real_distribution<double> param(0.05, 1.5);
  for (std::size_t k = 0; k < pairs; ++k) {
    SimilarityParams p{param(rng), param(rng)};
    auto a = t.ids[pick(rng)], b = t.ids[pick(rng)];
    ++r.cases;
    const double ab = synset_similarity(a, b, cache, p);
    const double ba = synset_similarity(b, a, cache, p);
    const double want = oracle_similarity(t, a, b, p);
    if (ab != ba) r.fail("asymmetric " + to_string(a) + " / " + to_string(b));
    if (!(ab >= 0.0 && ab <= 1.0)) r.fail("out of range " + std::to_string(ab));
    if (std::abs(ab - want) > 1e-12)
      r.fail("value " + std::to_string(ab) + " vs oracle " + std::to_string(want));
  }
  return r;
}

inline PropertyResult check_monotonicity(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"monotone in path length and subsumer depth"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> small(0, 30);
  std::uniform_real_distribution<double> param(0.05, 1.0);
  for (std::size_t k = 0; k < cases; ++k) {
    SimilarityParams p{param(rng), param(rng)};
    std::uint32_t l1 = small(rng), l2 = l1 + 1 + small(rng);
    std::uint32_t h1 = small(rng), h2 = h1 + 1 + small(rng);
    ++r.cases;
    if (!(path_factor(l1, p) > path_factor(l2, p))) r.fail("path factor not decreasing");
    if (!(depth_factor(h1, p) <= depth_factor(h2, p))) r.fail("depth factor decreasing");
    if (h1 < 5 && !(depth_factor(h1, p) < depth_factor(h2, p)))
      r.fail("depth factor flat below saturation");
    PathResult near{l1, {}, h2}, far{l2, {}, h2}, shallow{l1, {}, h1};
    if (!(path_similarity(near, p) >= path_similarity(far, p))) r.fail("sim grows with l");
    if (!(path_similarity(near, p) >= path_similarity(shallow, p))) r.fail("sim shrinks with h");
  }
  return r;
}

/// Exhaustive argmax of the per-token sum, using oracle similarities.
inline std::vector<SynsetId> oracle_wsd(const RandomTaxonomy &t,
                                        const std::vector<std::vector<SynsetId>> &cands) {
  std::vector<SynsetId> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands.size() == 1 || cands[i].size() == 1) {
      out.push_back(cands[i].front());
      continue;
    }
    double best = -1.0;
    SynsetId chosen = cands[i].front();
    for (SynsetId c : cands[i]) {
      std::vector<double> terms;
      for (std::size_t j = 0; j < cands.size(); ++j) {
        if (j == i) continue;
        double m = 0.0;
        for (SynsetId d : cands[j]) m = std::max(m, oracle_similarity(t, c, d));
        terms.push_back(m);
      }
      std::sort(terms.begin(), terms.end());
      double sum = 0.0;
      for (double x : terms) sum += x;
      if (sum > best) {
        best = sum;
        chosen = c;
      }
    }
    out.push_back(chosen);
  }
  return out;
}

inline PropertyResult check_wsd_oracle(std::uint64_t seed, std::size_t sentences) {
  PropertyResult r{"disambiguation vs exhaustive scoring"};
  std::mt19937_64 rng(seed);
  RandomTaxonomy t;
  for (std::size_t k = 0; k < sentences; ++k) {
    if (k % 20 == 0) t = random_taxonomy(rng, 30, 12);  // fresh graph every 20 sentences
    PathCache cache(t.index);
    std::uniform_int_distribution<std::size_t> len(1, 5), word(0, t.words.size() - 1);
    std::vector<TaggedToken> tokens;
    std::vector<std::vector<SynsetId>> cands;
    for (std::size_t n = len(rng), i = 0; i < n; ++i) {
      const auto &[lemma, senses] = t.words[word(rng)];
      tokens.push_back({lemma, lemma, PosCategory::Noun, std::nullopt, i + 1});
      cands.push_back(senses);
    }
    ++r.cases;
    auto got = disambiguate(tokens, cache);
    auto want = oracle_wsd(t, cands);
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (!got[i].sense || *got[i].sense != want[i]) {
        r.fail("sentence " + std::to_string(k) + " token " + std::to_string(i) + ": got " +
               (got[i].sense ? to_string(*got[i].sense) : "none") + ", want " +
               to_string(want[i]));
        break;
      }
    }
    // Permuting the other tokens never changes a token's sense.
    if (tokens.size() > 2) {
      auto shuffled = tokens;
      std::shuffle(shuffled.begin() + 1, shuffled.end(), rng);
      auto again = disambiguate(shuffled, cache);
      if (again.front().sense != got.front().sense) r.fail("order dependence");
    }
  }
  return r;
}

inline PropertyResult check_zeta_fallback(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"zeta fallback and padding neutrality"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_real_distribution<double> cell(0.0, 1.0), low(0.0, 0.8025);
  std::bernoulli_distribution all_low(0.4);
  const ZetaParams zp;
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t n = len(rng);
    const bool force_low = all_low(rng);
    std::vector<double> v1(n), v2(n);
    for (std::size_t i = 0; i < n; ++i) {
      v1[i] = force_low ? low(rng) : cell(rng);
      v2[i] = force_low ? low(rng) : cell(rng);
    }
    ++r.cases;
    std::size_t c1 = 0, c2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      c1 += v1[i] > 0.8025;
      c2 += v2[i] > 0.8025;
    }
    auto terms = zeta_terms(v1, v2, zp);
    const bool expect_fallback = c1 + c2 == 0;
    const double expect = expect_fallback ? n / 2.0 : (c1 + c2) / 1.8;
    if (terms.fallback != expect_fallback) r.fail("fallback flag wrong at n=" + std::to_string(n));
    if (terms.c1 != c1 || terms.c2 != c2) r.fail("counts wrong");
    if (std::abs(terms.zeta - expect) > 1e-12) r.fail("zeta value wrong");

    auto score = score_vectors(v1, v2, zp);
    const double s = std::sqrt(std::inner_product(v1.begin(), v1.end(), v1.begin(), 0.0)) *
                     std::sqrt(std::inner_product(v2.begin(), v2.end(), v2.begin(), 0.0));
    if (std::abs(score.s - s) > 1e-12) r.fail("S mismatch");
    if (std::abs(score.sim - std::clamp(s / expect, 0.0, 1.0)) > 1e-12) r.fail("Sim mismatch");
    auto swapped = score_vectors(v2, v1, zp);
    if (swapped.sim != score.sim) r.fail("Sim asymmetric");

    // Zero padding leaves norms and counts alone (but changes the fallback n).
    auto p1 = v1, p2 = v2;
    p1.resize(n + 3, 0.0);
    p2.resize(n + 3, 0.0);
    auto padded = zeta_terms(p1, p2, zp);
    if (padded.c1 != c1 || padded.c2 != c2) r.fail("padding changed counts");
    if (std::abs(euclidean_norm(p1) - euclidean_norm(v1)) > 1e-15) r.fail("padding changed norm");
  }
  return r;
}

inline PropertyResult check_prior_normalization(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"sense prior sums to one"};
  std::mt19937_64 rng(seed);
  auto t = random_taxonomy(rng, 40, 30);
  std::uniform_int_distribution<std::uint64_t> count(0, 1000);
  std::bernoulli_distribution present(0.6);
  for (std::size_t k = 0; k < cases; ++k) {
    SenseFrequencyTable table;
    for (auto id : t.ids)
      if (present(rng)) table.add(id, count(rng));
    const auto &[lemma, senses] = t.words[k % t.words.size()];
    ++r.cases;
    double sum = 0.0;
    for (auto id : t.index.senses(lemma, PosCategory::Noun)) {
      const double p = sense_prior(id, lemma, PosCategory::Noun, table, t.index);
      if (!(p > 0.0 && p <= 1.0)) r.fail("prior out of (0, 1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) r.fail("sum " + std::to_string(sum) + " for " + lemma);
  }
  return r;
}

inline PropertyResult check_pearson_affine(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"pearson symmetry and affine invariance"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(3, 80);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0), shift(-5.0, 5.0);
  std::bernoulli_distribution negate(0.5);
  for (std::size_t k = 0; k < cases; ++k) {
    const std::size_t n = len(rng);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = noise(rng);
      ys[i] = 0.7 * xs[i] + noise(rng);
    }
    const double a = scale(rng) * (negate(rng) ? -1.0 : 1.0), b = shift(rng);
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = a * xs[i] + b;
    ++r.cases;
    const double base = pearson(xs, ys);
    if (std::abs(base - pearson(ys, xs)) > 1e-12) r.fail("asymmetric");
    if (std::abs(pearson(ts, ys) - (a > 0 ? base : -base)) > 1e-9) r.fail("not affine invariant");
    if (std::abs(base) > 1.0) r.fail("|r| > 1");
  }
  return r;
}

/// Everything above with the case counts used by the acceptance run.
inline std::vector<PropertyResult> run_all_properties(std::uint64_t seed = 20260417) {
  return {check_shortest_path_bruteforce(seed + 1, 25), check_similarity_symmetry_range(seed + 2, 300),
          check_monotonicity(seed + 3, 200),           check_wsd_oracle(seed + 4, 200),
          check_zeta_fallback(seed + 5, 300),          check_prior_normalization(seed + 6, 200),
          check_pearson_affine(seed + 7, 200)};
}

}  // namespace semgraph::testing

#endif  // SEMGRAPH_TESTS_PROPERTY_CHECKS_HPP
