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

// semgraph: command-line front end.
//
//   semgraph word gem jewel -v
//   semgraph sentence "A gem is a jewel." "A jewel is a stone." -v
//   semgraph bench data/rg65_words.tsv --kind word --json-out report.json
//   semgraph build-corpus corpus.txt table.sft

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semgraph/benchmark.hpp"
#include "semgraph/corpus_stats.hpp"
#include "semgraph/errors.hpp"
#include "semgraph/sentence_similarity.hpp"
#include "semgraph/text_pipeline.hpp"
#include "semgraph/wordnet_store.hpp"

namespace {

using namespace semgraph;
using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kDegenerate = 3 };

struct Config {
  std::string dict_dir;
  double alpha = 0.2;
  double beta = 0.45;
  double gamma = 1.8;
  double threshold = 0.8025;
  double ic_lambda = 0.0;
  std::string prior_table;
  std::string stoplist;
  std::string lemma_exceptions;
  bool json_output = false;
  int verbose = 0;

  SimilarityParams sim() const { return {alpha, beta}; }
  ZetaParams zeta() const { return {gamma, threshold}; }
};

// Everything a command needs once the dictionary is loaded.
struct Session {
  TaxonomyIndex index;
  std::unique_ptr<PathCache> cache;
  std::optional<SenseFrequencyTable> table;
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void validate(const Config &cfg) {
  cfg.sim().validate();
  cfg.zeta().validate();
  if (cfg.ic_lambda < 0.0) throw ContractError("--ic-lambda must be non-negative");
}

std::filesystem::path resolve_dict(const Config &cfg) {
  if (!cfg.dict_dir.empty()) return cfg.dict_dir;
  if (auto env = default_dict_dir()) return *env;
  throw LoadError("<dict>", LoadError::kNoOffset,
                  "no dictionary directory: pass --dict or set SEMGRAPH_WN_DIR");
}

Session open_session(const Config &cfg) {
  validate(cfg);
  Session s;
  s.index = load_database(resolve_dict(cfg));
  s.cache = std::make_unique<PathCache>(s.index);
  if (!cfg.prior_table.empty())
    s.table = SenseFrequencyTable::load(std::filesystem::path(cfg.prior_table));
  else if (cfg.ic_lambda > 0.0)
    s.table = builtin_table(s.index);
  return s;
}

TextAnalyzer make_analyzer(const Config &cfg, const Session &s) {
  WsdOptions wsd;
  if (s.table) {
    wsd.prior = make_prior(*s.table, s.index);
    wsd.prior_weight = cfg.ic_lambda;
  }
  auto stops = cfg.stoplist.empty() ? StopList::defaults()
                                    : StopList::from_file(std::filesystem::path(cfg.stoplist));
  auto ex = cfg.lemma_exceptions.empty()
                ? LemmaExceptions::defaults()
                : LemmaExceptions::from_file(std::filesystem::path(cfg.lemma_exceptions));
  return TextAnalyzer(*s.cache, std::move(stops), std::move(ex), cfg.sim(), std::move(wsd));
}

json tokens_json(const std::vector<TaggedToken> &tokens, const TaxonomyIndex &index) {
  json out = json::array();
  for (const auto &t : tokens)
    out.push_back({{"surface", t.surface},
                   {"lemma", t.lemma},
                   {"pos", std::string(pos_name(t.pos))},
                   {"position", t.position},
                   {"sense", t.sense ? sense_name(*t.sense, index) : ""},
                   {"synset", t.sense ? to_string(*t.sense) : ""}});
  return out;
}

std::string tokens_text(const std::vector<TaggedToken> &tokens, const TaxonomyIndex &index) {
  std::string out = "[";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ", ";
    out += "('" + tokens[i].surface + "', " +
           (tokens[i].sense ? sense_name(*tokens[i].sense, index) : std::string("-")) + ")";
  }
  return out + "]";
}

std::string vector_text(const std::vector<double> &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i], 4);
  return out + "]";
}

// ---------------------------------------------------------------- word

struct WordArgs {
  std::string w1, w2;
  std::string pos = "n";
  bool senses = false;
};

int cmd_word(const Config &cfg, const WordArgs &args) {
  auto pos = parse_pos(args.pos);
  if (!pos) throw ContractError("--pos must be n or v");
  auto s = open_session(cfg);
  const auto w1 = normalize_lemma(args.w1), w2 = normalize_lemma(args.w2);
  std::vector<std::string> oov;
  for (const auto &w : {w1, w2})
    if (!s.index.has_lemma(w, *pos)) oov.push_back(w);
  auto match = best_word_match(w1, *pos, w2, *pos, *s.cache, cfg.sim());

  json j{{"word1", w1}, {"word2", w2}, {"pos", std::string(pos_name(*pos))},
         {"score", match.score}, {"oov", oov}};
  if (match.path) {
    j["sense1"] = sense_name(*match.sense1, s.index);
    j["sense2"] = sense_name(*match.sense2, s.index);
    j["length"] = match.path->length;
    j["depth"] = match.path->subsumer_depth;
    j["subsumer"] = sense_name(match.path->subsumer, s.index);
  }
  if (args.senses) {
    j["pairs"] = json::array();
    for (SynsetId a : s.index.senses(w1, *pos))
      for (SynsetId b : s.index.senses(w2, *pos)) {
        auto p = shortest_path(a, b, *s.cache);
        j["pairs"].push_back({{"sense1", sense_name(a, s.index)},
                              {"sense2", sense_name(b, s.index)},
                              {"length", p.length},
                              {"depth", p.subsumer_depth},
                              {"subsumer", sense_name(p.subsumer, s.index)},
                              {"score", path_similarity(p, cfg.sim())}});
      }
  }

  if (cfg.json_output) {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto &w : oov) std::cerr << "warning: '" << w << "' is not in the dictionary\n";
    std::cout << fmt(match.score) << '\n';
    if (cfg.verbose && match.path)
      std::cout << "  " << j["sense1"].get<std::string>() << " ~ " << j["sense2"].get<std::string>()
                << "  l=" << match.path->length << "  h=" << match.path->subsumer_depth
                << "  subsumer=" << j["subsumer"].get<std::string>() << '\n';
    if (args.senses)
      for (const auto &p : j["pairs"])
        std::cout << "  " << p["sense1"].get<std::string>() << " ~ "
                  << p["sense2"].get<std::string>() << "  l=" << p["length"]
                  << "  h=" << p["depth"] << "  " << fmt(p["score"].get<double>()) << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------ sentence

struct SentenceArgs {
  std::string s1, s2;
  bool word_order = false;
};

int cmd_sentence(const Config &cfg, const SentenceArgs &args) {
  auto s = open_session(cfg);
  SentenceComparator cmp(make_analyzer(cfg, s), cfg.zeta(), OrderOptions{args.word_order});
  auto a = cmp.analyze(args.s1, args.s2);
  if (cfg.json_output) {
    json j{{"similarity", a.similarity},
           {"tokens1", tokens_json(a.tokens1, s.index)},
           {"tokens2", tokens_json(a.tokens2, s.index)},
           {"v1", a.v1.values},
           {"v2", a.v2.values},
           {"S", a.score.s},
           {"c1", a.score.terms.c1},
           {"c2", a.score.terms.c2},
           {"zeta", a.score.terms.zeta},
           {"zeta_fallback", a.score.terms.fallback},
           {"raw", a.score.raw}};
    j["word_order"] = a.word_order ? json(*a.word_order) : json(nullptr);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << fmt(a.similarity) << '\n';
  if (cfg.verbose) {
    std::cout << "L1: " << tokens_text(a.tokens1, s.index) << '\n'
              << "L2: " << tokens_text(a.tokens2, s.index) << '\n'
              << "V1: " << vector_text(a.v1.values) << '\n'
              << "V2: " << vector_text(a.v2.values) << '\n'
              << "S = " << fmt(a.score.s) << "  C1 = " << a.score.terms.c1
              << "  C2 = " << a.score.terms.c2 << "  zeta = " << fmt(a.score.terms.zeta)
              << (a.score.terms.fallback ? " (fallback)" : "") << "  S/zeta = " << fmt(a.score.raw)
              << '\n';
  }
  if (a.word_order) std::cout << "W_s = " << fmt(*a.word_order) << '\n';
  return kOk;
}

// ----------------------------------------------------------------- wsd

int cmd_wsd(const Config &cfg, const std::string &text) {
  auto s = open_session(cfg);
  auto analyzer = make_analyzer(cfg, s);
  auto tokens = analyzer.analyze(text);
  if (cfg.json_output) {
    std::cout << tokens_json(tokens, s.index).dump(2) << '\n';
    return kOk;
  }
  for (const auto &t : tokens) {
    std::cout << t.position << '\t' << t.surface << '\t' << t.lemma << '\t' << pos_name(t.pos)
              << '\t' << sense_name(*t.sense, s.index) << '\n';
    if (cfg.verbose) std::cout << "\t" << gloss_of(*t.sense, s.index) << '\n';
  }
  return kOk;
}

// --------------------------------------------------------------- bench

struct BenchArgs {
  std::string dataset;
  std::string kind = "word";
  std::string json_out;
  std::vector<int> exclude;
  bool exclude_set = false;
  unsigned threads = 0;
};

int cmd_bench(const Config &cfg, const BenchArgs &args) {
  auto data = load_dataset(std::filesystem::path(args.dataset));
  auto s = open_session(cfg);
  EvalReport report;
  if (args.kind == "word") {
    report = run_word_benchmark(data, *s.cache, cfg.sim());
  } else {
    std::set<int> excl = args.exclude_set ? std::set<int>(args.exclude.begin(), args.exclude.end())
                                          : kDefaultSentenceExclusions;
    unsigned threads = args.threads ? args.threads : std::max(1u, std::thread::hardware_concurrency());
    SentenceComparator cmp(make_analyzer(cfg, s), cfg.zeta());
    report = run_sentence_benchmark(data, cmp, excl, threads);
  }
  if (!args.json_out.empty()) {
    std::ofstream out(args.json_out);
    if (!out) throw LoadError(args.json_out, LoadError::kNoOffset, "cannot open for writing");
    out << report.to_json() << '\n';
  }
  if (cfg.json_output)
    std::cout << report.to_json() << '\n';
  else
    report.print_table(std::cout);
  return kOk;
}

// -------------------------------------------------------- build-corpus

int cmd_build_corpus(const Config &cfg, const std::string &corpus, const std::string &out_path) {
  std::ifstream in(corpus, std::ios::binary);
  if (!in) throw LoadError(corpus, LoadError::kNoOffset, "cannot open file");
  auto s = open_session(cfg);
  auto analyzer = make_analyzer(cfg, s);
  auto table = build_from_corpus(in, analyzer, corpus);
  if (table.total() == 0) std::cerr << "warning: no senses counted in " << corpus << '\n';
  table.save(std::filesystem::path(out_path));
  if (cfg.json_output)
    std::cout << json{{"source", corpus}, {"output", out_path}, {"synsets", table.counts().size()},
                      {"total", table.total()}}
                     .dump(2)
              << '\n';
  else
    std::cout << "wrote " << out_path << ": " << table.counts().size() << " synsets, total "
              << table.total() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Taxonomy-based word and sentence similarity"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--dict", cfg.dict_dir, "WordNet dict directory (default: $SEMGRAPH_WN_DIR)");
  app.add_option("--alpha", cfg.alpha, "path decay")->capture_default_str();
  app.add_option("--beta", cfg.beta, "depth scaling")->capture_default_str();
  app.add_option("--gamma", cfg.gamma, "zeta divisor")->capture_default_str();
  app.add_option("--threshold", cfg.threshold, "synonymy cut-off for zeta")->capture_default_str();
  app.add_option("--ic-lambda", cfg.ic_lambda, "weight of the sense prior in WSD")
      ->capture_default_str();
  app.add_option("--prior-table", cfg.prior_table, "sense frequency table for the WSD prior");
  app.add_option("--stoplist", cfg.stoplist, "stopword file, one per line");
  app.add_option("--lemma-exceptions", cfg.lemma_exceptions, "'surface lemma' file");
  app.add_flag("--json", cfg.json_output, "machine-readable output");
  app.add_flag("-v,--verbose", cfg.verbose, "print traces");

  WordArgs word;
  auto *word_cmd = app.add_subcommand("word", "similarity of two words");
  word_cmd->add_option("word1", word.w1)->required();
  word_cmd->add_option("word2", word.w2)->required();
  word_cmd->add_option("--pos", word.pos, "n or v")->capture_default_str();
  word_cmd->add_flag("--senses", word.senses, "list every sense pair");

  SentenceArgs sent;
  auto *sent_cmd = app.add_subcommand("sentence", "similarity of two sentences");
  sent_cmd->add_option("sentence1", sent.s1)->required();
  sent_cmd->add_option("sentence2", sent.s2)->required();
  sent_cmd->add_flag("--word-order", sent.word_order, "multiply by (1 - W_s)");

  std::string wsd_text;
  auto *wsd_cmd = app.add_subcommand("wsd", "tag and disambiguate a sentence");
  wsd_cmd->add_option("text", wsd_text)->required();

  BenchArgs bench;
  auto *bench_cmd = app.add_subcommand("bench", "run a benchmark dataset");
  bench_cmd->add_option("dataset", bench.dataset)->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--kind", bench.kind)
      ->check(CLI::IsMember({"word", "sentence"}))
      ->capture_default_str();
  bench_cmd->add_option("--json-out", bench.json_out, "write the report as JSON");
  auto *excl = bench_cmd->add_option("--exclude", bench.exclude, "pair ids left out of r")
                   ->delimiter(',');
  bench_cmd->add_option("--threads", bench.threads, "worker threads (0 = all cores)");

  std::string corpus, out_path;
  auto *corpus_cmd = app.add_subcommand("build-corpus", "count senses in a text corpus");
  corpus_cmd->add_option("corpus", corpus)->required();
  corpus_cmd->add_option("output", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  bench.exclude_set = excl->count() > 0;

  try {
    if (*word_cmd) return cmd_word(cfg, word);
    if (*sent_cmd) return cmd_sentence(cfg, sent);
    if (*wsd_cmd) return cmd_wsd(cfg, wsd_text);
    if (*bench_cmd) return cmd_bench(cfg, bench);
    if (*corpus_cmd) return cmd_build_corpus(cfg, corpus, out_path);
  } catch (const DegenerateInputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const ContractError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}
