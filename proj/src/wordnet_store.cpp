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

#include "semgraph/wordnet_store.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

#include "semgraph/errors.hpp"

namespace semgraph {

namespace {

constexpr std::array<std::string_view, kPosCount> kFileSuffix = {"noun", "verb", "adj", "adv"};

std::size_t pos_index(PosCategory pos) { return static_cast<std::size_t>(pos); }

std::string sense_count_key(std::string_view lemma, SynsetId id) {
  std::string key(lemma);
  key += '\t';
  key += to_string(id);
  return key;
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string(), LoadError::kNoOffset, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

/// Calls fn(line, byte_offset) for every record line, skipping the
/// license header (lines starting with two spaces) and blank lines.
template <typename Fn>
void for_each_record(std::string_view text, Fn &&fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && !line.starts_with("  ")) fn(line, pos);
    pos = end + 1;
  }
}

/// Whitespace tokenizer over one record line.
class FieldReader {
 public:
  FieldReader(std::string_view line, const std::string &file, std::uint64_t offset)
      : line_(line), file_(file), offset_(offset) {}

  std::string_view next(const char *what) {
    while (cur_ < line_.size() && line_[cur_] == ' ') ++cur_;
    if (cur_ >= line_.size()) fail(std::string("truncated record, expected ") + what);
    std::size_t start = cur_;
    while (cur_ < line_.size() && line_[cur_] != ' ') ++cur_;
    return line_.substr(start, cur_ - start);
  }

  template <typename T>
  T number(const char *what, int base = 10) {
    auto field = next(what);
    T value{};
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value, base);
    if (ec != std::errc{} || end != field.data() + field.size())
      fail(std::string("bad ") + what + " '" + std::string(field) + "'");
    return value;
  }

  [[noreturn]] void fail(const std::string &what) const { throw LoadError(file_, offset_, what); }

 private:
  std::string_view line_;
  const std::string &file_;
  std::uint64_t offset_;
  std::size_t cur_ = 0;
};

std::string clean_data_lemma(std::string_view word) {
  // adjective syntactic markers: "(a)", "(p)", "(ip)"
  if (auto paren = word.find('('); paren != std::string_view::npos && word.back() == ')')
    word = word.substr(0, paren);
  return normalize_lemma(word);
}

void parse_data_file(const std::filesystem::path &path, PosCategory pos, TaxonomyBuilder &builder) {
  const std::string file = path.string();
  const std::string text = read_file(path);
  for_each_record(text, [&](std::string_view line, std::uint64_t at) {
    auto bar = line.find('|');
    if (bar == std::string_view::npos) throw LoadError(file, at, "record has no gloss separator");
    FieldReader fields(line.substr(0, bar), file, at);

    Synset s;
    s.id.pos = pos;
    s.id.offset = fields.number<std::uint32_t>("synset offset");
    if (s.id.offset == 0) fields.fail("synset offset 0 is reserved");
    s.lex_filenum = fields.number<std::uint8_t>("lex_filenum");
    auto ss_type = fields.next("ss_type");
    if (ss_type.size() != 1 || pos_from_code(ss_type[0]) != pos)
      fields.fail("ss_type '" + std::string(ss_type) + "' does not match file category");
    s.ss_type = ss_type[0];

    const auto w_cnt = fields.number<unsigned>("w_cnt", 16);
    if (w_cnt == 0) fields.fail("synset without lemmas");
    s.lemmas.reserve(w_cnt);
    for (unsigned i = 0; i < w_cnt; ++i) {
      s.lemmas.push_back(clean_data_lemma(fields.next("word")));
      (void)fields.number<unsigned>("lex_id", 16);
    }

    const auto p_cnt = fields.number<unsigned>("p_cnt");
    s.pointers.reserve(p_cnt);
    for (unsigned i = 0; i < p_cnt; ++i) {
      Pointer p;
      p.symbol = std::string(fields.next("pointer symbol"));
      p.kind = classify_pointer(p.symbol);
      p.target.offset = fields.number<std::uint32_t>("pointer offset");
      auto target_pos = fields.next("pointer pos");
      auto tp = target_pos.size() == 1 ? pos_from_code(target_pos[0]) : std::nullopt;
      if (!tp) fields.fail("bad pointer pos '" + std::string(target_pos) + "'");
      p.target.pos = *tp;
      p.source_target = fields.number<std::uint16_t>("source/target", 16);
      s.pointers.push_back(std::move(p));
    }
    // verb frames follow for data.verb; they are not needed downstream.

    auto gloss = line.substr(bar + 1);
    while (!gloss.empty() && gloss.front() == ' ') gloss.remove_prefix(1);
    while (!gloss.empty() && gloss.back() == ' ') gloss.remove_suffix(1);
    if (gloss.empty()) throw LoadError(file, at, "empty gloss");
    s.gloss = std::string(gloss);

    builder.add_synset(std::move(s));
  });
}

void parse_index_file(const std::filesystem::path &path, PosCategory pos, TaxonomyBuilder &builder) {
  const std::string file = path.string();
  const std::string text = read_file(path);
  for_each_record(text, [&](std::string_view line, std::uint64_t at) {
    FieldReader fields(line, file, at);
    auto lemma = fields.next("lemma");
    auto pos_field = fields.next("pos");
    if (pos_field.size() != 1 || pos_from_code(pos_field[0]) != pos)
      fields.fail("pos '" + std::string(pos_field) + "' does not match file category");
    const auto synset_cnt = fields.number<unsigned>("synset_cnt");
    const auto p_cnt = fields.number<unsigned>("p_cnt");
    for (unsigned i = 0; i < p_cnt; ++i) (void)fields.next("pointer symbol");
    (void)fields.number<unsigned>("sense_cnt");
    (void)fields.number<unsigned>("tagsense_cnt");
    std::vector<SynsetId> senses;
    senses.reserve(synset_cnt);
    for (unsigned i = 0; i < synset_cnt; ++i)
      senses.push_back({pos, fields.number<std::uint32_t>("synset offset")});
    builder.add_lemma(lemma, pos, std::move(senses));
  });
}

void parse_sense_index(const std::filesystem::path &path, const std::array<bool, kPosCount> &loaded,
                       TaxonomyBuilder &builder) {
  const std::string file = path.string();
  const std::string text = read_file(path);
  for_each_record(text, [&](std::string_view line, std::uint64_t at) {
    FieldReader fields(line, file, at);
    auto key = fields.next("sense key");
    auto percent = key.find('%');
    if (percent == std::string_view::npos || percent + 1 >= key.size())
      fields.fail("bad sense key '" + std::string(key) + "'");
    PosCategory pos;
    switch (key[percent + 1]) {
      case '1': pos = PosCategory::Noun; break;
      case '2': pos = PosCategory::Verb; break;
      case '3':
      case '5': pos = PosCategory::Adjective; break;
      case '4': pos = PosCategory::Adverb; break;
      default: fields.fail("bad ss_type in sense key '" + std::string(key) + "'");
    }
    const auto offset = fields.number<std::uint32_t>("synset offset");
    (void)fields.number<unsigned>("sense number");
    const auto count = fields.number<std::uint32_t>("tag count");
    if (loaded[pos_index(pos)] && count > 0)
      builder.add_sense_count(key.substr(0, percent), {pos, offset}, count);
  });
}

}  // namespace

std::string normalize_lemma(std::string_view lemma) {
  std::string out;
  out.reserve(lemma.size());
  for (char c : lemma) {
    if (c == ' ')
      out += '_';
    else if (c >= 'A' && c <= 'Z')
      out += static_cast<char>(c - 'A' + 'a');
    else
      out += c;
  }
  return out;
}

// ---------------------------------------------------------------- index

std::size_t TaxonomyIndex::synset_count(PosCategory pos) const noexcept {
  return per_pos_count_[pos_index(pos)];
}

bool TaxonomyIndex::has_pos(PosCategory pos) const noexcept { return loaded_[pos_index(pos)]; }

const Synset &TaxonomyIndex::synset(SynsetId id) const { return nodes_[node(id)]; }

std::optional<NodeId> TaxonomyIndex::find_node(SynsetId id) const noexcept {
  auto it = id_to_node_.find(id);
  if (it == id_to_node_.end()) return std::nullopt;
  return it->second;
}

NodeId TaxonomyIndex::node(SynsetId id) const {
  auto it = id_to_node_.find(id);
  if (it == id_to_node_.end()) throw LookupError("unknown synset " + to_string(id));
  return it->second;
}

const TaxonomyIndex::LemmaEntry *TaxonomyIndex::find_lemma(std::string_view lemma,
                                                           PosCategory pos) const {
  const auto &map = lemmas_[pos_index(pos)];
  bool clean = std::none_of(lemma.begin(), lemma.end(),
                            [](char c) { return c == ' ' || (c >= 'A' && c <= 'Z'); });
  auto it = clean ? map.find(lemma) : map.find(normalize_lemma(lemma));
  return it == map.end() ? nullptr : &it->second;
}

std::span<const SynsetId> TaxonomyIndex::senses(std::string_view lemma, PosCategory pos) const {
  const auto *entry = find_lemma(lemma, pos);
  if (!entry) return {};
  return entry->senses;
}

std::span<const std::uint32_t> TaxonomyIndex::sense_tag_counts(std::string_view lemma,
                                                               PosCategory pos) const {
  const auto *entry = find_lemma(lemma, pos);
  if (!entry) return {};
  return entry->tag_counts;
}

std::uint64_t TaxonomyIndex::lemma_tag_count(std::string_view lemma, PosCategory pos) const {
  std::uint64_t total = 0;
  for (auto c : sense_tag_counts(lemma, pos)) total += c;
  return total;
}

// -------------------------------------------------------------- builder

void TaxonomyBuilder::add_synset(Synset synset) {
  declare_pos(synset.id.pos);
  synsets_.push_back(std::move(synset));
}

void TaxonomyBuilder::add_lemma(std::string_view lemma, PosCategory pos,
                                std::vector<SynsetId> senses,
                                std::vector<std::uint32_t> tag_counts) {
  declare_pos(pos);
  tag_counts.resize(senses.size(), 0);
  lemmas_[pos_index(pos)][normalize_lemma(lemma)] = {std::move(senses), std::move(tag_counts)};
}

void TaxonomyBuilder::add_sense_count(std::string_view lemma, SynsetId synset,
                                      std::uint32_t count) {
  sense_counts_[sense_count_key(normalize_lemma(lemma), synset)] += count;
}

TaxonomyIndex TaxonomyBuilder::build() && {
  TaxonomyIndex index;
  index.loaded_ = loaded_;

  std::sort(synsets_.begin(), synsets_.end(),
            [](const Synset &a, const Synset &b) { return a.id < b.id; });

  // Synthetic roots first, then real synsets in (pos, offset) order.
  for (std::size_t p = 0; p < kPosCount; ++p) {
    if (!loaded_[p]) continue;
    Synset root;
    root.id = SynsetId::virtual_root(static_cast<PosCategory>(p));
    root.ss_type = pos_code(root.id.pos);
    root.lemmas = {"synthetic_root"};
    root.gloss = std::string(kVirtualRootGloss);
    index.nodes_.push_back(std::move(root));
  }
  index.root_count_ = index.nodes_.size();
  for (auto &s : synsets_) {
    if (s.lemmas.empty()) throw ConsistencyError("synset " + to_string(s.id) + " has no lemmas");
    if (s.gloss.empty()) throw ConsistencyError("synset " + to_string(s.id) + " has no gloss");
    ++index.per_pos_count_[pos_index(s.id.pos)];
    index.nodes_.push_back(std::move(s));
  }
  synsets_.clear();

  const auto n = index.nodes_.size();
  index.id_to_node_.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    if (!index.id_to_node_.emplace(index.nodes_[i].id, i).second)
      throw ConsistencyError("duplicate synset " + to_string(index.nodes_[i].id));
  }

  for (auto &[key, count] : sense_counts_) {
    auto tab = key.find('\t');
    auto id = parse_synset_id(std::string_view(key).substr(tab + 1));
    if (auto it = index.id_to_node_.find(*id); it != index.id_to_node_.end())
      index.nodes_[it->second].tag_count += count;
  }

  // Pointer resolution. Targets in a category that was not loaded are kept
  // as opaque references; targets in a loaded category must exist.
  std::vector<std::vector<NodeId>> parents(n);
  for (NodeId i = index.root_count_; i < n; ++i) {
    const auto &s = index.nodes_[i];
    for (const auto &p : s.pointers) {
      if (!loaded_[pos_index(p.target.pos)]) continue;
      auto it = index.id_to_node_.find(p.target);
      if (it == index.id_to_node_.end() || p.target.is_virtual_root())
        throw ConsistencyError("dangling pointer '" + p.symbol + "' " + to_string(s.id) + " -> " +
                               to_string(p.target));
      if (p.kind == PointerKind::Hypernym || p.kind == PointerKind::InstanceHypernym) {
        if (p.target.pos != s.id.pos)
          throw ConsistencyError("cross-category hypernym " + to_string(s.id) + " -> " +
                                 to_string(p.target));
        if (std::find(parents[i].begin(), parents[i].end(), it->second) == parents[i].end())
          parents[i].push_back(it->second);
      }
    }
  }
  for (NodeId i = index.root_count_; i < n; ++i)
    if (parents[i].empty())
      parents[i].push_back(index.id_to_node_.at(SynsetId::virtual_root(index.nodes_[i].id.pos)));

  std::vector<std::vector<NodeId>> children(n);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId p : parents[i]) children[p].push_back(i);

  // Depth by BFS down from the roots. A hypernym cycle with no way up to a
  // root would be left unreached; such a component is hung off its root.
  constexpr std::uint32_t kUnreached = ~std::uint32_t{0};
  index.depths_.assign(n, kUnreached);
  std::deque<NodeId> queue;
  auto flood = [&](NodeId start, std::uint32_t d) {
    index.depths_[start] = d;
    queue.push_back(start);
    while (!queue.empty()) {
      NodeId cur = queue.front();
      queue.pop_front();
      for (NodeId c : children[cur]) {
        if (index.depths_[c] > index.depths_[cur] + 1) {
          index.depths_[c] = index.depths_[cur] + 1;
          queue.push_back(c);
        }
      }
    }
  };
  for (NodeId r = 0; r < index.root_count_; ++r) flood(r, 0);
  for (NodeId i = index.root_count_; i < n; ++i) {
    if (index.depths_[i] != kUnreached) continue;
    NodeId root = index.id_to_node_.at(SynsetId::virtual_root(index.nodes_[i].id.pos));
    parents[i].push_back(root);
    children[root].push_back(i);
    flood(i, 1);
  }

  auto to_csr = [n](const std::vector<std::vector<NodeId>> &lists, std::vector<std::uint32_t> &offsets,
                    std::vector<NodeId> &targets) {
    offsets.assign(1, 0);
    offsets.reserve(n + 1);
    for (const auto &l : lists) {
      targets.insert(targets.end(), l.begin(), l.end());
      offsets.push_back(static_cast<std::uint32_t>(targets.size()));
    }
  };
  to_csr(parents, index.parent_offsets_, index.parent_targets_);
  to_csr(children, index.child_offsets_, index.child_targets_);

  for (std::size_t p = 0; p < kPosCount; ++p) {
    for (auto &[lemma, entry] : lemmas_[p]) {
      for (std::size_t k = 0; k < entry.senses.size(); ++k) {
        if (!index.id_to_node_.contains(entry.senses[k]) || entry.senses[k].is_virtual_root())
          throw ConsistencyError("lemma '" + lemma + "' refers to unknown synset " +
                                 to_string(entry.senses[k]));
        if (auto it = sense_counts_.find(sense_count_key(lemma, entry.senses[k]));
            it != sense_counts_.end())
          entry.tag_counts[k] += it->second;
      }
    }
  }
  index.lemmas_ = std::move(lemmas_);
  sense_counts_.clear();
  return index;
}

// -------------------------------------------------------------- loading

TaxonomyIndex load_database(const std::filesystem::path &dict_dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dict_dir))
    throw LoadError(dict_dir.string(), LoadError::kNoOffset, "not a directory");

  TaxonomyBuilder builder;
  std::array<bool, kPosCount> loaded{};
  for (std::size_t p = 0; p < kPosCount; ++p) {
    const auto index_file = dict_dir / ("index." + std::string(kFileSuffix[p]));
    const auto data_file = dict_dir / ("data." + std::string(kFileSuffix[p]));
    const bool has_index = fs::exists(index_file);
    const bool has_data = fs::exists(data_file);
    const auto pos = static_cast<PosCategory>(p);
    if (!has_index && !has_data && pos != PosCategory::Noun) continue;
    if (!has_index) throw LoadError(index_file.string(), LoadError::kNoOffset, "missing required file");
    if (!has_data) throw LoadError(data_file.string(), LoadError::kNoOffset, "missing required file");
    builder.declare_pos(pos);
    loaded[p] = true;
    parse_data_file(data_file, pos, builder);
    parse_index_file(index_file, pos, builder);
  }
  if (const auto sense_file = dict_dir / "index.sense"; fs::exists(sense_file))
    parse_sense_index(sense_file, loaded, builder);
  return std::move(builder).build();
}

std::optional<std::filesystem::path> default_dict_dir() {
  const char *env = std::getenv(std::string(kEnvDictDir).c_str());
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::vector<SynsetId> synsets_for(std::string_view lemma, PosCategory pos,
                                  const TaxonomyIndex &index) {
  auto s = index.senses(lemma, pos);
  return {s.begin(), s.end()};
}

const std::string &gloss_of(SynsetId id, const TaxonomyIndex &index) {
  return index.synset(id).gloss;
}

std::optional<SynsetId> resolve_sense_name(std::string_view name, const TaxonomyIndex &index) {
  auto last = name.rfind('.');
  if (last == std::string_view::npos || last == 0) return std::nullopt;
  auto mid = name.rfind('.', last - 1);
  if (mid == std::string_view::npos || mid == 0) return std::nullopt;
  auto lemma = name.substr(0, mid);
  auto pos = parse_pos(name.substr(mid + 1, last - mid - 1));
  unsigned number = 0;
  auto digits = name.substr(last + 1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), number);
  if (!pos || ec != std::errc{} || end != digits.data() + digits.size() || number == 0)
    return std::nullopt;
  auto senses = index.senses(lemma, *pos);
  if (number > senses.size()) return std::nullopt;
  return senses[number - 1];
}

std::string sense_name(SynsetId id, const TaxonomyIndex &index) {
  const auto &s = index.synset(id);
  if (id.is_virtual_root()) return std::string("*root*.") + pos_code(id.pos);
  const auto &lemma = s.lemmas.front();
  auto senses = index.senses(lemma, id.pos);
  auto it = std::find(senses.begin(), senses.end(), id);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d",
                it == senses.end() ? 0 : static_cast<int>(it - senses.begin()) + 1);
  return lemma + "." + s.ss_type + "." + buf;
}

std::vector<std::pair<SynsetId, SynsetId>> pointer_symmetry_violations(
    const TaxonomyIndex &index, std::span<const SynsetId> sample) {
  auto inverse = [](PointerKind k) {
    switch (k) {
      case PointerKind::Hypernym: return PointerKind::Hyponym;
      case PointerKind::Hyponym: return PointerKind::Hypernym;
      case PointerKind::InstanceHypernym: return PointerKind::InstanceHyponym;
      case PointerKind::InstanceHyponym: return PointerKind::InstanceHypernym;
      default: return PointerKind::Other;
    }
  };
  std::vector<std::pair<SynsetId, SynsetId>> bad;
  for (auto id : sample) {
    const auto &s = index.synset(id);
    for (const auto &p : s.pointers) {
      if (p.kind == PointerKind::Other || !index.has_pos(p.target.pos)) continue;
      const auto &t = index.synset(p.target);
      const auto want = inverse(p.kind);
      bool found = std::any_of(t.pointers.begin(), t.pointers.end(), [&](const Pointer &q) {
        return q.kind == want && q.target == id;
      });
      if (!found) bad.emplace_back(id, p.target);
    }
  }
  return bad;
}

std::string format_record_header(const Synset &synset) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%08u %02u %c %02x", synset.id.offset,
                static_cast<unsigned>(synset.lex_filenum), synset.ss_type,
                static_cast<unsigned>(synset.lemmas.size()));
  return buf;
}

}  // namespace semgraph
