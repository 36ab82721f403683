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

#include "semgraph/text_pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "semgraph/errors.hpp"

namespace semgraph {

namespace {

constexpr std::string_view kDefaultStopwords[] = {
    // determiners and quantifiers
    "a", "an", "the", "this", "that", "these", "those", "each", "every", "either", "neither",
    "some", "any", "no", "all", "both", "such", "what", "whatever", "which", "whichever",
    "another", "other", "many", "much", "more", "most", "few", "several", "own", "same",
    // pronouns
    "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself", "yourselves", "he",
    "him", "his", "himself", "she", "her", "hers", "herself", "it", "its", "itself", "we", "us",
    "our", "ours", "ourselves", "they", "them", "their", "theirs", "themselves", "who", "whom",
    "whose", "someone", "somebody", "something", "anyone", "anybody", "anything", "everyone",
    "everybody", "everything", "nobody", "nothing", "none", "one", "ones",
    // prepositions
    "about", "above", "across", "after", "against", "along", "among", "around", "as", "at",
    "before", "behind", "below", "beneath", "beside", "between", "beyond", "by", "down", "during",
    "except", "for", "from", "in", "inside", "into", "like", "near", "of", "off", "on", "onto",
    "out", "outside", "over", "past", "since", "through", "throughout", "till", "to", "toward",
    "towards", "under", "underneath", "until", "up", "upon", "with", "within", "without", "via",
    // conjunctions and wh-adverbs
    "and", "or", "but", "nor", "so", "yet", "if", "because", "although", "though", "while",
    "whereas", "unless", "whether", "than", "then", "when", "where", "wherever", "why", "how",
    "there", "here", "not",
    // copula, auxiliaries, modals
    "be", "am", "is", "are", "was", "were", "been", "being", "have", "has", "had", "having", "do",
    "does", "did", "doing", "can", "could", "will", "would", "shall", "should", "may", "might",
    "must", "ought",
    // interjections
    "oh", "ah", "hey", "hello", "yes", "well", "wow", "alas"};

constexpr std::pair<std::string_view, std::string_view> kDefaultExceptions[] = {
    // irregular plurals
    {"men", "man"}, {"women", "woman"}, {"children", "child"}, {"people", "people"},
    {"feet", "foot"}, {"teeth", "tooth"}, {"mice", "mouse"}, {"geese", "goose"},
    {"lives", "life"}, {"knives", "knife"}, {"wives", "wife"}, {"leaves", "leaf"},
    {"shelves", "shelf"}, {"wolves", "wolf"}, {"halves", "half"},
    // plurals whose suffix-stripped form is a different noun
    {"species", "species"}, {"series", "series"}, {"news", "news"}, {"physics", "physics"},
    {"means", "means"}, {"glasses", "glass"}, {"ashes", "ash"},
    // irregular verb forms
    {"made", "make"}, {"grew", "grow"}, {"grown", "grow"}, {"wrote", "write"},
    {"written", "write"}, {"told", "tell"}, {"held", "hold"}, {"kept", "keep"},
    {"left", "leave"}, {"brought", "bring"}, {"bought", "buy"}, {"thought", "think"},
    {"taught", "teach"}, {"caught", "catch"}, {"found", "find"}, {"gave", "give"},
    {"given", "give"}, {"took", "take"}, {"taken", "take"}, {"went", "go"}, {"gone", "go"},
    {"came", "come"}, {"saw", "see"}, {"seen", "see"}, {"knew", "know"}, {"known", "know"},
    {"ate", "eat"}, {"eaten", "eat"}, {"flew", "fly"}, {"flown", "fly"}, {"wore", "wear"},
    {"worn", "wear"}, {"built", "build"}, {"sent", "send"}, {"spent", "spend"}, {"met", "meet"},
    {"sat", "sit"}, {"stood", "stand"}, {"laid", "lay"}, {"paid", "pay"}, {"said", "say"},
    {"ran", "run"}, {"began", "begin"}, {"begun", "begin"}, {"drank", "drink"},
    {"drunk", "drink"}, {"fell", "fall"}, {"fallen", "fall"}, {"felt", "feel"}, {"led", "lead"},
    {"lit", "light"}, {"lost", "lose"}, {"meant", "mean"}, {"rode", "ride"}, {"sold", "sell"},
    {"shot", "shoot"}, {"spoke", "speak"}, {"spoken", "speak"}, {"struck", "strike"},
    {"swam", "swim"}, {"threw", "throw"}, {"thrown", "throw"}, {"understood", "understand"},
    {"won", "win"}, {"broke", "break"}, {"broken", "break"}, {"chose", "choose"},
    {"chosen", "choose"}, {"drew", "draw"}, {"drawn", "draw"}, {"drove", "drive"},
    {"driven", "drive"}, {"forgot", "forget"}, {"forgotten", "forget"}, {"hid", "hide"},
    {"hidden", "hide"}, {"rose", "rise"}, {"risen", "rise"}, {"sang", "sing"}, {"sung", "sing"},
    {"slept", "sleep"}, {"stole", "steal"}, {"stolen", "steal"}, {"woke", "wake"},
    {"woken", "wake"}};

bool is_separator(char c) {
  switch (c) {
    case ',': case ';': case ':': case '!': case '?': case '"': case '(': case ')':
      return true;
    default:
      return false;
  }
}

bool is_edge_punct(char c) { return c == '.' || c == '\'' || c == '`'; }

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool ends_with(std::string_view s, std::string_view suffix) { return s.ends_with(suffix); }

std::vector<std::string> read_entries(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), LoadError::kNoOffset, "cannot open file");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ resources

StopList StopList::defaults() {
  std::unordered_set<std::string> words;
  for (auto w : kDefaultStopwords) words.emplace(w);
  return StopList(std::move(words));
}

StopList StopList::from_file(const std::filesystem::path &path) {
  std::unordered_set<std::string> words;
  for (auto &entry : read_entries(path)) {
    std::transform(entry.begin(), entry.end(), entry.begin(), lower);
    words.insert(std::move(entry));
  }
  return StopList(std::move(words));
}

LemmaExceptions LemmaExceptions::defaults() {
  LemmaExceptions ex;
  for (auto [surface, lemma] : kDefaultExceptions) ex.add(std::string(surface), std::string(lemma));
  return ex;
}

LemmaExceptions LemmaExceptions::from_file(const std::filesystem::path &path) {
  LemmaExceptions ex;
  std::size_t line_no = 0;
  for (const auto &entry : read_entries(path)) {
    ++line_no;
    std::istringstream fields(entry);
    std::string surface, lemma, extra;
    if (!(fields >> surface >> lemma) || (fields >> extra))
      throw DatasetError(path.string(), line_no, "expected 'surface lemma'");
    ex.add(std::move(surface), std::move(lemma));
  }
  return ex;
}

std::optional<std::string_view> LemmaExceptions::find(std::string_view surface) const {
  auto it = map_.find(std::string(surface));
  if (it == map_.end()) return std::nullopt;
  return std::string_view(it->second);
}

// ------------------------------------------------------------ tokenizer

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t b = 0, e = cur.size();
    while (b < e && is_edge_punct(cur[b])) ++b;
    while (e > b && is_edge_punct(cur[e - 1])) --e;
    if (b < e) out.push_back(cur.substr(b, e - b));
    cur.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' ||
        is_separator(c))
      flush();
    else
      cur += lower(c);
  }
  flush();
  return out;
}

// ----------------------------------------------------------- lemmatizer

std::vector<std::string> suffix_candidates(std::string_view token, PosCategory pos) {
  std::vector<std::string> out;
  auto strip = [&](std::string_view suffix, std::string_view repl) {
    if (token.size() > suffix.size() + 1 && ends_with(token, suffix)) {
      std::string base(token.substr(0, token.size() - suffix.size()));
      base += repl;
      if (std::find(out.begin(), out.end(), base) == out.end()) out.push_back(std::move(base));
    }
  };
  if (ends_with(token, "'s")) {
    strip("'s", "");
    return out;
  }
  if (pos == PosCategory::Noun) {
    strip("ies", "y");
    strip("ches", "ch");
    strip("shes", "sh");
    strip("xes", "x");
    strip("zes", "z");
    strip("ses", "s");
    if (!ends_with(token, "ss")) strip("s", "");
  } else if (pos == PosCategory::Verb) {
    strip("ies", "y");
    strip("ied", "y");
    strip("es", "e");
    strip("es", "");
    if (!ends_with(token, "ss")) strip("s", "");
    strip("ed", "e");
    strip("ed", "");
    strip("ing", "e");
    strip("ing", "");
    // doubled final consonant: stopped -> stop, running -> run
    for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
      if (token.size() > suffix.size() + 2 && ends_with(token, suffix)) {
        auto stem = token.substr(0, token.size() - suffix.size());
        if (stem[stem.size() - 1] == stem[stem.size() - 2]) {
          std::string base(stem.substr(0, stem.size() - 1));
          if (std::find(out.begin(), out.end(), base) == out.end()) out.push_back(std::move(base));
        }
      }
    }
  }
  return out;
}

std::optional<std::string> lemmatize(std::string_view token, PosCategory pos,
                                     const TaxonomyIndex &index,
                                     const LemmaExceptions &exceptions) {
  if (auto ex = exceptions.find(token); ex && index.has_lemma(*ex, pos)) return std::string(*ex);
  for (auto &base : suffix_candidates(token, pos))
    if (index.has_lemma(base, pos)) return base;
  if (index.has_lemma(token, pos)) return std::string(token);
  return std::nullopt;
}

std::vector<TaggedToken> pos_filter(std::span<const std::string> tokens, const TaxonomyIndex &index,
                                    const StopList &stops, const LemmaExceptions &exceptions) {
  std::vector<TaggedToken> out;
  for (const auto &tok : tokens) {
    if (tok.empty() || stops.contains(tok)) continue;
    for (PosCategory pos : {PosCategory::Noun, PosCategory::Verb}) {
      if (auto lemma = lemmatize(tok, pos, index, exceptions)) {
        out.push_back({tok, std::move(*lemma), pos, std::nullopt, out.size() + 1});
        break;
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------ WSD

double wsd_score(std::span<const TaggedToken> tokens, std::size_t i, SynsetId candidate,
                 const PathCache &cache, const SimilarityParams &params) {
  const auto &index = cache.index();
  std::vector<double> terms;
  terms.reserve(tokens.size());
  for (std::size_t j = 0; j < tokens.size(); ++j) {
    if (j == i) continue;
    double best = 0.0;
    for (SynsetId other : index.senses(tokens[j].lemma, tokens[j].pos))
      best = std::max(best, synset_similarity(candidate, other, cache, params));
    terms.push_back(best);
  }
  // Summing in sorted order keeps the score independent of token order.
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

std::vector<TaggedToken> disambiguate(std::vector<TaggedToken> tokens, const PathCache &cache,
                                      const SimilarityParams &params, const WsdOptions &options) {
  const auto &index = cache.index();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto candidates = index.senses(tokens[i].lemma, tokens[i].pos);
    if (candidates.empty())
      throw ContractError("token '" + tokens[i].lemma + "' has no candidate senses");
    if (candidates.size() == 1 || tokens.size() == 1) {
      tokens[i].sense = candidates.front();
      continue;
    }
    SynsetId best = candidates.front();
    double best_score = -1.0;
    double best_prior = -1.0;
    for (SynsetId cand : candidates) {
      double prior = options.prior ? options.prior(tokens[i], cand) : 0.0;
      double score = wsd_score(tokens, i, cand, cache, params) + options.prior_weight * prior;
      if (score > best_score || (score == best_score && prior > best_prior)) {
        best = cand;
        best_score = score;
        best_prior = prior;
      }
    }
    tokens[i].sense = best;
  }
  return tokens;
}

// ------------------------------------------------------------- analyzer

TextAnalyzer::TextAnalyzer(const PathCache &cache, StopList stops, LemmaExceptions exceptions,
                           SimilarityParams params, WsdOptions wsd)
    : cache_(&cache),
      stops_(std::move(stops)),
      exceptions_(std::move(exceptions)),
      params_(params),
      wsd_(std::move(wsd)) {
  params_.validate();
}

std::vector<TaggedToken> TextAnalyzer::analyze(std::string_view text) const {
  auto words = tokenize(text);
  auto tagged = pos_filter(words, index(), stops_, exceptions_);
  return disambiguate(std::move(tagged), *cache_, params_, wsd_);
}

}  // namespace semgraph
