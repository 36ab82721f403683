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

#include "semgraph/synset.hpp"

#include <charconv>
#include <cstdio>

namespace semgraph {

char pos_code(PosCategory pos) noexcept {
  switch (pos) {
    case PosCategory::Noun: return 'n';
    case PosCategory::Verb: return 'v';
    case PosCategory::Adjective: return 'a';
    case PosCategory::Adverb: return 'r';
  }
  return '?';
}

std::optional<PosCategory> pos_from_code(char code) noexcept {
  switch (code) {
    case 'n': return PosCategory::Noun;
    case 'v': return PosCategory::Verb;
    case 'a':
    case 's': return PosCategory::Adjective;
    case 'r': return PosCategory::Adverb;
    default: return std::nullopt;
  }
}

std::string_view pos_name(PosCategory pos) noexcept {
  switch (pos) {
    case PosCategory::Noun: return "noun";
    case PosCategory::Verb: return "verb";
    case PosCategory::Adjective: return "adj";
    case PosCategory::Adverb: return "adv";
  }
  return "?";
}

std::optional<PosCategory> parse_pos(std::string_view text) noexcept {
  if (text == "n" || text == "noun") return PosCategory::Noun;
  if (text == "v" || text == "verb") return PosCategory::Verb;
  if (text == "a" || text == "s" || text == "adj" || text == "adjective")
    return PosCategory::Adjective;
  if (text == "r" || text == "adv" || text == "adverb") return PosCategory::Adverb;
  return std::nullopt;
}

std::string to_string(SynsetId id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c:%08u", pos_code(id.pos), id.offset);
  return buf;
}

std::optional<SynsetId> parse_synset_id(std::string_view text) noexcept {
  if (text.size() < 3 || text[1] != ':') return std::nullopt;
  auto pos = pos_from_code(text[0]);
  if (!pos) return std::nullopt;
  std::uint32_t offset = 0;
  auto digits = text.substr(2);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), offset);
  if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  return SynsetId{*pos, offset};
}

PointerKind classify_pointer(std::string_view symbol) noexcept {
  if (symbol == "@") return PointerKind::Hypernym;
  if (symbol == "@i") return PointerKind::InstanceHypernym;
  if (symbol == "~") return PointerKind::Hyponym;
  if (symbol == "~i") return PointerKind::InstanceHyponym;
  return PointerKind::Other;
}

}  // namespace semgraph
