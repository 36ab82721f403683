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

#include "semgraph/corpus_stats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "semgraph/errors.hpp"

namespace semgraph {

void SenseFrequencyTable::add(SynsetId id, std::uint64_t count) {
  if (count == 0) return;
  counts_[id] += count;
  total_ += count;
}

std::uint64_t SenseFrequencyTable::count(SynsetId id) const noexcept {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

void SenseFrequencyTable::save(std::ostream &out) const {
  out << kSftHeader << '\n';
  for (const auto &[id, n] : counts_) out << to_string(id) << '\t' << n << '\n';
}

void SenseFrequencyTable::save(const std::filesystem::path &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError(path.string(), LoadError::kNoOffset, "cannot open for writing");
  save(out);
  if (!out) throw LoadError(path.string(), LoadError::kNoOffset, "write failed");
}

SenseFrequencyTable SenseFrequencyTable::load(std::istream &in, const std::string &name) {
  SenseFrequencyTable table(name);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kSftHeader) throw DatasetError(name, 1, "missing 'semgraph-sft v1' header");
      continue;
    }
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DatasetError(name, line_no, "expected 'pos:offset<TAB>count'");
    auto id = parse_synset_id(std::string_view(line).substr(0, tab));
    if (!id) throw DatasetError(name, line_no, "bad synset id");
    std::uint64_t n = 0;
    const char *first = line.data() + tab + 1;
    const char *last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || first == last)
      throw DatasetError(name, line_no, "bad count");
    if (table.counts_.contains(*id)) throw DatasetError(name, line_no, "duplicate synset id");
    table.add(*id, n);
  }
  if (line_no == 0) throw DatasetError(name, 1, "empty file");
  return table;
}

SenseFrequencyTable SenseFrequencyTable::load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), LoadError::kNoOffset, "cannot open file");
  return load(in, path.string());
}

SenseFrequencyTable build_from_corpus(std::istream &corpus, const TextAnalyzer &analyzer,
                                      std::string source) {
  SenseFrequencyTable table(std::move(source));
  std::string sentence;
  auto flush = [&] {
    if (sentence.find_first_not_of(" \t\r") != std::string::npos) {
      for (const auto &tok : analyzer.analyze(sentence))
        if (tok.sense) table.add(*tok.sense);
    }
    sentence.clear();
  };
  char c;
  while (corpus.get(c)) {
    if (c == '.' || c == '!' || c == '?' || c == '\n') {
      flush();
    } else {
      sentence += c;
    }
  }
  flush();
  return table;
}

SenseFrequencyTable builtin_table(const TaxonomyIndex &index) {
  SenseFrequencyTable table("builtin");
  for (const auto &s : index.nodes())
    if (!s.id.is_virtual_root()) table.add(s.id, s.tag_count);
  return table;
}

double sense_prior(SynsetId id, std::string_view lemma, PosCategory pos,
                   const SenseFrequencyTable &table, const TaxonomyIndex &index) {
  auto senses = index.senses(lemma, pos);
  if (std::find(senses.begin(), senses.end(), id) == senses.end())
    throw ContractError(to_string(id) + " is not a sense of '" + std::string(lemma) + "'");
  double denom = 0.0;
  for (SynsetId s : senses) denom += static_cast<double>(table.count(s)) + 1.0;
  return (static_cast<double>(table.count(id)) + 1.0) / denom;
}

SensePrior make_prior(const SenseFrequencyTable &table, const TaxonomyIndex &index) {
  return [&table, &index](const TaggedToken &tok, SynsetId id) {
    return sense_prior(id, tok.lemma, tok.pos, table, index);
  };
}

}  // namespace semgraph
