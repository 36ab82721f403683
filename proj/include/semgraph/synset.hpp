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

#ifndef SEMGRAPH_SYNSET_HPP
#define SEMGRAPH_SYNSET_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semgraph {

enum class PosCategory : std::uint8_t { Noun = 0, Verb = 1, Adjective = 2, Adverb = 3 };

inline constexpr std::size_t kPosCount = 4;

/// Single-letter code used by the dictionary files ("n", "v", "a", "r").
/// Satellite adjectives ("s") map to Adjective on input.
char pos_code(PosCategory pos) noexcept;
std::optional<PosCategory> pos_from_code(char code) noexcept;
std::string_view pos_name(PosCategory pos) noexcept;
/// Accepts "noun"/"n", "verb"/"v", "adj"/"adjective"/"a"/"s", "adv"/"adverb"/"r".
std::optional<PosCategory> parse_pos(std::string_view text) noexcept;

/// True for the categories that take part in similarity.
constexpr bool is_similarity_pos(PosCategory pos) noexcept {
  return pos == PosCategory::Noun || pos == PosCategory::Verb;
}

/// (pos, byte offset) key of a synset record. Offset 0 is never used by a
/// real record (the license header occupies the start of every data file),
/// so it names the synthetic per-category root.
struct SynsetId {
  PosCategory pos = PosCategory::Noun;
  std::uint32_t offset = 0;

  friend constexpr auto operator<=>(const SynsetId &, const SynsetId &) = default;

  constexpr bool is_virtual_root() const noexcept { return offset == 0; }

  static constexpr SynsetId virtual_root(PosCategory pos) noexcept { return {pos, 0}; }
};

/// "n:09411430" form used in persisted tables and traces.
std::string to_string(SynsetId id);
std::optional<SynsetId> parse_synset_id(std::string_view text) noexcept;

enum class PointerKind : std::uint8_t {
  Hypernym,          // @
  InstanceHypernym,  // @i
  Hyponym,           // ~
  InstanceHyponym,   // ~i
  Other,
};

PointerKind classify_pointer(std::string_view symbol) noexcept;

struct Pointer {
  PointerKind kind = PointerKind::Other;
  std::string symbol;  // raw symbol as it appears in the data file
  SynsetId target;
  std::uint16_t source_target = 0;  // the four hex digits; 0 for semantic pointers
};

struct Synset {
  SynsetId id;
  std::uint8_t lex_filenum = 0;
  char ss_type = 'n';
  std::vector<std::string> lemmas;
  std::vector<Pointer> pointers;
  std::string gloss;
  std::uint32_t tag_count = 0;
};

}  // namespace semgraph

template <>
struct std::hash<semgraph::SynsetId> {
  std::size_t operator()(const semgraph::SynsetId &id) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{static_cast<std::uint8_t>(id.pos)} << 32) |
                                      id.offset);
  }
};

#endif  // SEMGRAPH_SYNSET_HPP
