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

#include <fstream>

#include "doctest.h"
#include "semgraph/errors.hpp"
#include "semgraph/text_pipeline.hpp"
#include "support/test_support.hpp"

using namespace semgraph;
using namespace semgraph::testing;
using doctest::Approx;
using Tokens = std::vector<std::string>;

TEST_CASE("tokenize") {
  CHECK(tokenize("A gem is a jewel or stone.") == Tokens{"a", "gem", "is", "a", "jewel", "or", "stone"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("12 o'clock") == Tokens{"12", "o'clock"});
  CHECK(tokenize("(Hello), world!  'Quoted' well-known...") ==
        Tokens{"hello", "world", "quoted", "well-known"});
  CHECK(tokenize("a;b:c?d\"e\"") == Tokens{"a", "b", "c", "d", "e"});
  CHECK(tokenize(" \t\n ").empty());
}

TEST_CASE("default stoplist covers the required function words") {
  auto stops = StopList::defaults();
  for (const char *w : {"a", "an", "the", "is", "are", "was", "were", "be", "been", "to", "that",
                        "you", "such", "as", "or", "and", "in", "on", "of", "for", "it", "this",
                        "which", "when", "who", "by", "with", "at", "from"})
    CHECK_MESSAGE(stops.contains(w), w);
  CHECK_FALSE(stops.contains("jewel"));
}

TEST_CASE("suffix candidates") {
  CHECK(suffix_candidates("bodies", PosCategory::Noun).front() == "body");
  CHECK(suffix_candidates("boxes", PosCategory::Noun).front() == "box");
  CHECK(suffix_candidates("glass", PosCategory::Noun).empty());
  auto walked = suffix_candidates("walked", PosCategory::Verb);
  CHECK(std::find(walked.begin(), walked.end(), "walk") != walked.end());
  auto stopped = suffix_candidates("stopped", PosCategory::Verb);
  CHECK(std::find(stopped.begin(), stopped.end(), "stop") != stopped.end());
  CHECK(suffix_candidates("river's", PosCategory::Noun) == Tokens{"river"});
}

TEST_CASE("lemmatize against the fixture") {
  const auto &idx = mini_index();
  auto ex = LemmaExceptions::defaults();
  CHECK(lemmatize("banks", PosCategory::Noun, idx, ex) == "bank");
  CHECK(lemmatize("gems", PosCategory::Noun, idx, ex) == "gem");
  CHECK(lemmatize("walking", PosCategory::Verb, idx, ex) == "walk");
  CHECK(lemmatize("walks", PosCategory::Verb, idx, ex) == "walk");
  CHECK(lemmatize("went", PosCategory::Verb, idx, ex) == "go");
  CHECK(lemmatize("river", PosCategory::Noun, idx, ex) == "river");
  CHECK_FALSE(lemmatize("walking", PosCategory::Noun, idx, ex));
  CHECK_FALSE(lemmatize("qzxv", PosCategory::Noun, idx, ex));
}

TEST_CASE("pos_filter keeps nouns first, then verbs") {
  const auto &idx = mini_index();
  auto stops = StopList::defaults();
  auto toks = pos_filter(tokenize("The precious gems went to the river banks, walking."), idx, stops);
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].lemma == "gem");
  CHECK(toks[0].pos == PosCategory::Noun);
  CHECK(toks[1].lemma == "go");
  CHECK(toks[1].pos == PosCategory::Verb);
  CHECK(toks[2].lemma == "river");
  CHECK(toks[3].lemma == "bank");
  CHECK(toks[3].pos == PosCategory::Noun);  // noun reading wins over the verb
  CHECK(toks[4].lemma == "walk");
  for (std::size_t i = 0; i < toks.size(); ++i) {
    CHECK(toks[i].position == i + 1);
    CHECK_FALSE(toks[i].sense);
  }
  CHECK(pos_filter(tokenize("a is the to"), idx, stops).empty());
}

TEST_CASE("disambiguation") {
  const auto &idx = mini_index();
  PathCache cache(idx);
  auto stops = StopList::defaults();
  auto tag = [&](const char *text) { return pos_filter(tokenize(text), idx, stops); };

  SUBCASE("context picks the land sense of bank") {
    auto toks = disambiguate(tag("river bank"), cache);
    CHECK(toks[0].sense == noun(mini::kRiver));
    CHECK(toks[1].sense == noun(mini::kBankLand));
    CHECK(wsd_score(toks, 1, noun(mini::kBankLand), cache, {}) ==
          Approx(0.3218533800158997).epsilon(1e-14));
    CHECK(wsd_score(toks, 1, noun(mini::kBankMoney), cache, {}) == 0.0);
  }
  SUBCASE("context picks the jewel sense of gem") {
    auto toks = disambiguate(tag("A gem is a jewel."), cache);
    CHECK(toks[0].sense == noun(mini::kJewel));
    CHECK(toks[1].sense == noun(mini::kJewel));
  }
  SUBCASE("a lone token takes its first sense") {
    auto toks = disambiguate(tag("bank"), cache);
    CHECK(toks[0].sense == noun(mini::kBankLand));
  }
  SUBCASE("exact ties fall back to sense order") {
    // institution is unrelated to both gem senses: every candidate scores 0.
    auto toks = disambiguate(tag("gem institution"), cache);
    CHECK(toks[0].sense == noun(mini::kTreasure));
  }
  SUBCASE("a prior breaks ties and can outweigh context") {
    WsdOptions tie;
    tie.prior = [](const TaggedToken &, SynsetId id) { return id == noun(mini::kJewel) ? 0.9 : 0.1; };
    auto toks = disambiguate(tag("gem institution"), cache, {}, tie);
    CHECK(toks[0].sense == noun(mini::kJewel));

    WsdOptions heavy;
    heavy.prior = [](const TaggedToken &, SynsetId id) { return id == noun(mini::kBankMoney) ? 1.0 : 0.0; };
    CHECK(disambiguate(tag("river bank"), cache, {}, heavy)[1].sense == noun(mini::kBankLand));
    heavy.prior_weight = 1.0;
    CHECK(disambiguate(tag("river bank"), cache, {}, heavy)[1].sense == noun(mini::kBankMoney));
  }
  SUBCASE("a token without senses violates the contract") {
    std::vector<TaggedToken> bad{{"qzxv", "qzxv", PosCategory::Noun, std::nullopt, 1},
                                {"bank", "bank", PosCategory::Noun, std::nullopt, 2}};
    CHECK_THROWS_AS(disambiguate(bad, cache), ContractError);
  }
}

TEST_CASE("analyzer is deterministic and senses come from the candidates") {
  const auto &idx = mini_index();
  PathCache cache(idx);
  TextAnalyzer analyzer(cache);
  const char *text = "The Thames river banks, stones and gems; walking travel.";
  auto a = analyzer.analyze(text);
  auto b = analyzer.analyze(text);
  CHECK(a == b);
  for (const auto &t : a) {
    REQUIRE(t.sense);
    auto cands = idx.senses(t.lemma, t.pos);
    CHECK(std::find(cands.begin(), cands.end(), *t.sense) != cands.end());
    CHECK((t.pos == PosCategory::Noun || t.pos == PosCategory::Verb));
  }
}

TEST_CASE("stoplist and exception files") {
  auto dir = std::filesystem::temp_directory_path();
  auto stop_file = dir / "semgraph_stops.txt";
  auto ex_file = dir / "semgraph_ex.txt";
  {
    std::ofstream(stop_file) << "# comment\nRiver\n\n  bank \n";
    std::ofstream(ex_file) << "# surface lemma\nrivers river\nbanques bank\n";
  }
  auto stops = StopList::from_file(stop_file);
  CHECK(stops.size() == 2);
  CHECK(stops.contains("river"));
  auto ex = LemmaExceptions::from_file(ex_file);
  CHECK(ex.find("banques") == std::string_view("bank"));
  CHECK_FALSE(ex.find("bank"));
  CHECK(lemmatize("banques", PosCategory::Noun, mini_index(), ex) == "bank");

  std::ofstream(ex_file) << "one two three\n";
  CHECK_THROWS_AS(LemmaExceptions::from_file(ex_file), DatasetError);
  CHECK_THROWS_AS(StopList::from_file(dir / "semgraph_missing_stops.txt"), LoadError);
  std::filesystem::remove(stop_file);
  std::filesystem::remove(ex_file);
}
