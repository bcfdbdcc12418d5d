#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "varlex/errors.hpp"
#include "varlex/grammar.hpp"
#include "varlex/variant.hpp"

namespace varlex {

using grammar::Components;

struct ParsedSurface {
  MentionType type;
  Descriptor descriptor;
  Components components;
};

namespace detail {

inline std::optional<grammar::Match> full_match(std::string_view surface, MentionType type,
                                                grammar::Diagnostics& diag) {
  auto m = grammar::match_at(type, surface, 0, &diag);
  if (m && m->end == surface.size()) return m;
  if (m) {
    // The match stopped short; report where it stopped unless a longer attempt got further.
    if (m->end >= diag.furthest) {
      diag.furthest = m->end;
      diag.expected = "end of input";
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Parses `surface` under the grammar of `hint`. The whole string must be
// consumed; otherwise ParseFailure names the first offending byte.
inline Descriptor parse_descriptor(std::string_view surface, MentionType hint) {
  grammar::Diagnostics diag;
  auto m = detail::full_match(surface, hint, diag);
  if (!m) throw ParseFailure(std::string(surface), diag.furthest, diag.expected);
  return std::move(m->descriptor);
}

// Classifies and parses a standalone surface string. When several types
// accept the string, the tie-break priority decides.
inline ParsedSurface classify(std::string_view surface) {
  grammar::Diagnostics diag;
  std::optional<ParsedSurface> best;
  for (MentionType t : kAllMentionTypes) {
    auto m = detail::full_match(surface, t, diag);
    if (!m) continue;
    if (!best || type_priority(t) < type_priority(best->type))
      best = ParsedSurface{t, std::move(m->descriptor), m->components};
  }
  if (!best) throw ParseFailure(std::string(surface), diag.furthest, diag.expected);
  return std::move(*best);
}

// Parses any nucleotide- or protein-level variant string, e.g. a knowledge
// base HGVS cell. Throws ParseFailure for regions and accessions.
inline VariantDescriptor parse_variant(std::string_view surface) {
  auto parsed = classify(surface);
  if (auto* d = std::get_if<VariantDescriptor>(&parsed.descriptor)) return std::move(*d);
  throw ParseFailure(std::string(surface), 0, "a sequence variant");
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && chars::is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && chars::is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Single-letter code for one side of a change; unrecognized text is kept.
inline std::string change_side(std::string_view side) {
  side = trim(side);
  if (side.size() == 1) return std::string(1, chars::to_upper(side[0]));
  for (const auto& nt : kNucleotideNames)
    if (chars::iequals(side, nt.name)) return std::string(1, nt.code);
  try {
    return std::string(1, normalize_amino_acid(side));
  } catch (const UnknownResidue&) {
    return std::string(side);
  }
}

}  // namespace detail

// Rewrites a substitution written with any of >, ->, -->, the arrow glyph,
// "/" or " to " into "X>Y" form, mapping residue and base names to letters.
inline std::string normalize_arrow(std::string_view s) {
  static constexpr std::string_view kSeparators[] = {"-->", "->", "\xE2\x86\x92", " to ", ">",
                                                     "/"};
  std::size_t at = std::string_view::npos;
  std::size_t len = 0;
  for (auto sep : kSeparators) {
    const auto p = s.find(sep);
    if (p != std::string_view::npos && (at == std::string_view::npos || p < at)) {
      at = p;
      len = sep.size();
    }
  }
  if (at == std::string_view::npos) throw NoSeparator(std::string(s));
  return detail::change_side(s.substr(0, at)) + ">" + detail::change_side(s.substr(at + len));
}

}  // namespace varlex
