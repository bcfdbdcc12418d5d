#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "varlex/chars.hpp"
#include "varlex/tokenizer.hpp"
#include "varlex/variant.hpp"

// Deterministic surface grammars for the twelve mention types.
//
// Each type is a small set of alternatives written as recursive-descent
// matchers over a byte cursor. A type matches at a position when one of its
// alternatives succeeds and ends on a word boundary; the longest such
// alternative wins. The same matchers back both parse_descriptor() and the
// recognizer, so every recognized surface re-parses under its own type.
namespace varlex::grammar {

// Sub-spans of a substitution-like mention, in source offsets.
struct Components {
  std::optional<Span> wildtype;
  std::optional<Span> mutant;
  std::optional<Span> position;

  bool operator==(const Components&) const = default;
};

struct Match {
  MentionType type = MentionType::kDnaMutation;
  std::size_t start = 0;
  std::size_t end = 0;
  Descriptor descriptor;
  Components components;
};

// Furthest failure seen while matching, for error messages.
struct Diagnostics {
  std::size_t furthest = 0;
  const char* expected = "";
};

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t pos, Diagnostics* diag)
      : text_(text), pos_(pos), diag_(diag) {}

  std::string_view text() const { return text_; }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t k = 0) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }
  bool at_boundary() const { return at_end() || !chars::is_alnum(text_[pos_]); }

  bool fail(const char* expected) {
    if (diag_ && (pos_ > diag_->furthest || !*diag_->expected)) {
      diag_->furthest = pos_;
      diag_->expected = expected;
    }
    return false;
  }

  bool lit(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return fail("literal");
    pos_ += w.size();
    return true;
  }

  bool ilit(std::string_view w) {
    if (!chars::iequals(text_.substr(pos_, w.size()), w)) return fail("keyword");
    pos_ += w.size();
    return true;
  }

  // Case-insensitive keyword not followed by a letter.
  bool word(std::string_view w) {
    const std::size_t save = pos_;
    if (!ilit(w)) return false;
    if (chars::is_alpha(peek())) {
      pos_ = save;
      return fail("end of word");
    }
    return true;
  }

  bool spaces() {
    const std::size_t save = pos_;
    while (peek() == ' ') ++pos_;
    return pos_ > save ? true : fail("space");
  }
  void opt_spaces() {
    while (peek() == ' ') ++pos_;
  }

  // Sequence coordinate: [1-9][0-9]*, at most 12 digits.
  bool position(std::int64_t& value, Span& span) {
    const std::size_t start = pos_;
    if (!chars::is_digit(peek())) return fail("position");
    if (peek() == '0') return fail("position without leading zero");
    std::int64_t v = 0;
    while (chars::is_digit(peek())) {
      if (pos_ - start >= 12) {
        pos_ = start;
        return fail("shorter position");
      }
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    value = v;
    span = Span{start, pos_};
    return true;
  }

  // Base-pair coordinate, digit-group commas allowed: 3,18,33,000.
  bool coordinate(std::int64_t& value, Span& span) {
    const std::size_t start = pos_;
    if (!chars::is_digit(peek())) return fail("coordinate");
    std::int64_t v = 0;
    int digits = 0;
    while (true) {
      if (chars::is_digit(peek())) {
        if (++digits > 15) {
          pos_ = start;
          return fail("shorter coordinate");
        }
        v = v * 10 + (peek() - '0');
        ++pos_;
      } else if (peek() == ',' && chars::is_digit(peek(1))) {
        ++pos_;
      } else {
        break;
      }
    }
    value = v;
    span = Span{start, pos_};
    return true;
  }

  bool nucleotide(std::string& out, Span& span, bool any_case) {
    const char c = any_case ? chars::to_upper(peek()) : peek();
    if (kNucleotideAlphabet.find(c) == std::string_view::npos || c == '\0')
      return fail("nucleotide");
    out.assign(1, c);
    span = Span{pos_, pos_ + 1};
    ++pos_;
    return true;
  }

  bool nucleotide_seq(std::string& out, Span& span, bool any_case) {
    const std::size_t start = pos_;
    std::string seq;
    while (true) {
      const char c = any_case ? chars::to_upper(peek()) : peek();
      if (c == '\0' || kNucleotideAlphabet.find(c) == std::string_view::npos) break;
      seq.push_back(c);
      ++pos_;
    }
    if (seq.empty()) return fail("nucleotide sequence");
    out = std::move(seq);
    span = Span{start, pos_};
    return true;
  }

  // One-letter residue. 'X' reads as stop; stop is refused when !allow_stop.
  bool aa1(char& out, Span& span, bool allow_stop) {
    const char c = peek();
    char code = 0;
    if (c == '*' || c == 'X') {
      code = '*';
    } else if (c == 'U') {
      code = 'U';
    } else {
      for (const auto& aa : kStandardAminoAcids)
        if (aa.code == c) code = c;
    }
    if (!code || (code == '*' && !allow_stop)) return fail("amino acid");
    out = code;
    span = Span{pos_, pos_ + 1};
    ++pos_;
    return true;
  }

  // Three-letter residue in Title case or upper case (Gln, GLN, Ter, Sec).
  bool aa3(char& out, Span& span, bool allow_stop) {
    const std::string_view w = text_.substr(pos_, 3);
    if (w.size() < 3 || !chars::is_upper(w[0])) return fail("three-letter amino acid");
    const bool title = chars::is_lower(w[1]) && chars::is_lower(w[2]);
    const bool upper = chars::is_upper(w[1]) && chars::is_upper(w[2]);
    if (!title && !upper) return fail("three-letter amino acid");
    char code = 0;
    for (const auto& aa : kStandardAminoAcids)
      if (chars::iequals(w, aa.three)) code = aa.code;
    if (chars::iequals(w, "Ter")) code = '*';
    if (chars::iequals(w, "Sec")) code = 'U';
    if (!code || (code == '*' && !allow_stop)) return fail("three-letter amino acid");
    out = code;
    span = Span{pos_, pos_ + 3};
    pos_ += 3;
    return true;
  }

  // Full residue name, any case: "glutamine", "aspartic acid".
  bool aa_full(char& out, Span& span) {
    std::size_t best = 0;
    char code = 0;
    auto consider = [&](std::string_view name, char c) {
      if (name.size() > best && chars::iequals(text_.substr(pos_, name.size()), name) &&
          !chars::is_alpha(pos_ + name.size() < text_.size() ? text_[pos_ + name.size()] : '\0')) {
        best = name.size();
        code = c;
      }
    };
    for (const auto& aa : kStandardAminoAcids) consider(aa.name, aa.code);
    for (const auto& alias : kResidueAliases) consider(alias.name, alias.code);
    if (!best) return fail("amino acid name");
    out = code;
    span = Span{pos_, pos_ + best};
    pos_ += best;
    return true;
  }

  bool nt_full(char& out, Span& span) {
    for (const auto& nt : kNucleotideNames) {
      if (word(nt.name)) {
        out = nt.code;
        span = Span{pos_ - nt.name.size(), pos_};
        return true;
      }
    }
    return fail("nucleotide name");
  }

  // >, ->, -->, or the UTF-8 rightwards arrow.
  bool arrow() {
    for (std::string_view a : {"-->", "->", "\xE2\x86\x92", ">"})
      if (text_.substr(pos_, a.size()) == a) {
        pos_ += a.size();
        return true;
      }
    return fail("'>'");
  }

  // Separator between the two residues of a change: " to " or a spaced arrow.
  bool change_separator() {
    const std::size_t save = pos_;
    if (lit(" to ")) return true;
    opt_spaces();
    if (arrow()) {
      opt_spaces();
      return true;
    }
    pos_ = save;
    return fail("'to' or arrow");
  }

  // c. g. r. m. ; p. is handled by the protein grammars.
  std::optional<SequenceLevel> nucleotide_level() {
    if (peek(1) != '.') return std::nullopt;
    SequenceLevel l;
    switch (peek()) {
      case 'c': l = SequenceLevel::kCoding; break;
      case 'g': l = SequenceLevel::kGenomic; break;
      case 'r': l = SequenceLevel::kRna; break;
      case 'm': l = SequenceLevel::kMito; break;
      default: return std::nullopt;
    }
    pos_ += 2;
    return l;
  }

  bool protein_prefix() {
    if (peek() == 'p' && peek(1) == '.') {
      pos_ += 2;
      return true;
    }
    return false;
  }

 private:
  std::string_view text_;
  std::size_t pos_;
  Diagnostics* diag_;
};

namespace detail {

using Alternative = bool (*)(Scanner&, Match&);

inline VariantDescriptor& variant(Match& m) {
  if (!std::holds_alternative<VariantDescriptor>(m.descriptor)) m.descriptor = VariantDescriptor{};
  return std::get<VariantDescriptor>(m.descriptor);
}

inline RegionDescriptor& region(Match& m) {
  if (!std::holds_alternative<RegionDescriptor>(m.descriptor)) m.descriptor = RegionDescriptor{};
  return std::get<RegionDescriptor>(m.descriptor);
}

// Residue in one- or three-letter form.
inline bool residue(Scanner& s, char& out, Span& span, bool allow_stop) {
  const std::size_t save = s.pos();
  if (s.aa3(out, span, allow_stop)) return true;
  s.seek(save);
  return s.aa1(out, span, allow_stop);
}

// Position range "N" or "N_M" with M >= N.
inline bool position_range(Scanner& s, VariantDescriptor& d, Span& span) {
  std::int64_t p = 0;
  Span ps;
  if (!s.position(p, ps)) return false;
  d.position = p;
  span = ps;
  if (s.peek() == '_' && chars::is_digit(s.peek(1))) {
    const std::size_t save = s.pos();
    s.seek(save + 1);
    std::int64_t e = 0;
    Span es;
    if (!s.position(e, es) || e < p) {
      s.seek(save);
      return s.fail("range end >= start");
    }
    d.position_end = e;
    span.end = es.end;
  }
  return true;
}

// --- nucleotide-level grammars ---

// c.1976A>T, 1976A>T
inline bool dna_substitution(Scanner& s, Match& m) {
  auto& d = variant(m);
  const auto level = s.nucleotide_level();
  const bool any_case = level.has_value();
  d.level = level.value_or(SequenceLevel::kUnspecified);
  std::int64_t p = 0;
  Span ps, rs, as;
  std::string ref, alt;
  if (!s.position(p, ps) || !s.nucleotide(ref, rs, any_case) || !s.arrow() ||
      !s.nucleotide(alt, as, any_case))
    return false;
  d.position = p;
  d.ref_allele = ref;
  d.alt_allele = alt;
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, ps};
  return true;
}

// c.1799_1801delTTG, c.1799_1800insA, c.1799dup, 35delG
inline bool dna_indel(Scanner& s, Match& m) {
  auto& d = variant(m);
  const auto level = s.nucleotide_level();
  const bool any_case = level.has_value();
  d.level = level.value_or(SequenceLevel::kUnspecified);
  Span ps;
  if (!position_range(s, d, ps)) return false;
  m.components.position = ps;
  std::string seq;
  Span ss;
  if (s.lit("del")) {
    d.edit = EditKind::kDeletion;
    const std::size_t save = s.pos();
    if (s.nucleotide_seq(seq, ss, any_case)) {
      d.ref_allele = seq;
      m.components.wildtype = ss;
    } else {
      s.seek(save);
    }
    return true;
  }
  if (s.lit("dup")) {
    d.edit = EditKind::kDuplication;
    const std::size_t save = s.pos();
    if (s.nucleotide_seq(seq, ss, any_case)) {
      d.ref_allele = seq;
      m.components.wildtype = ss;
    } else {
      s.seek(save);
    }
    return true;
  }
  if (s.lit("ins")) {
    if (!s.nucleotide_seq(seq, ss, any_case)) return false;
    d.edit = EditKind::kInsertion;
    d.alt_allele = seq;
    m.components.mutant = ss;
    return true;
  }
  return s.fail("del, ins or dup");
}

// 1976A, c.1976A
inline bool dna_allele(Scanner& s, Match& m) {
  auto& d = variant(m);
  const auto level = s.nucleotide_level();
  d.level = level.value_or(SequenceLevel::kUnspecified);
  std::int64_t p = 0;
  Span ps, rs;
  std::string ref;
  if (!s.position(p, ps) || !s.nucleotide(ref, rs, level.has_value())) return false;
  d.position = p;
  d.ref_allele = ref;
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, std::nullopt, ps};
  return true;
}

// A>T, A->T, A to T
inline bool dna_change_letters(Scanner& s, Match& m) {
  auto& d = variant(m);
  std::string ref, alt;
  Span rs, as;
  if (!s.nucleotide(ref, rs, false) || !s.change_separator() || !s.nucleotide(alt, as, false))
    return false;
  d.ref_allele = ref;
  d.alt_allele = alt;
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, std::nullopt};
  return true;
}

// guanine to cytosine
inline bool dna_change_names(Scanner& s, Match& m) {
  auto& d = variant(m);
  char ref = 0, alt = 0;
  Span rs, as;
  if (!s.nt_full(ref, rs) || !s.change_separator() || !s.nt_full(alt, as)) return false;
  d.ref_allele = std::string(1, ref);
  d.alt_allele = std::string(1, alt);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, std::nullopt};
  return true;
}

// --- protein-level grammars ---

// V600E, p.V600E, R97*, R97X
inline bool protein_sub_one_letter(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  s.protein_prefix();
  char ref = 0, alt = 0;
  std::int64_t p = 0;
  Span rs, ps, as;
  if (!s.aa1(ref, rs, false) || !s.position(p, ps) || !s.aa1(alt, as, true)) return false;
  d.position = p;
  d.ref_allele = std::string(1, ref);
  d.alt_allele = std::string(1, alt);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, ps};
  return true;
}

// p.Gln659Leu, Gln659Leu, Gln659*, Arg97Ter
inline bool protein_sub_three_letter(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  s.protein_prefix();
  char ref = 0, alt = 0;
  std::int64_t p = 0;
  Span rs, ps, as;
  if (!s.aa3(ref, rs, false) || !s.position(p, ps)) return false;
  const std::size_t save = s.pos();
  if (!s.aa3(alt, as, true)) {
    s.seek(save);
    if (s.peek() != '*' && s.peek() != 'X') return s.fail("three-letter amino acid or stop");
    if (!s.aa1(alt, as, true)) return false;
  }
  d.position = p;
  d.ref_allele = std::string(1, ref);
  d.alt_allele = std::string(1, alt);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, ps};
  return true;
}

// p.F508del, Phe508del, p.G4dup
inline bool protein_del_dup(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  s.protein_prefix();
  char ref = 0;
  std::int64_t p = 0;
  Span rs, ps;
  if (!residue(s, ref, rs, false) || !s.position(p, ps)) return false;
  if (s.lit("del")) {
    d.edit = EditKind::kDeletion;
  } else if (s.lit("dup")) {
    d.edit = EditKind::kDuplication;
  } else {
    return false;
  }
  d.position = p;
  d.ref_allele = std::string(1, ref);
  m.components = Components{rs, std::nullopt, ps};
  return true;
}

// p.R97fs, p.Arg97GlyfsTer16, R97GfsX16, p.R97fs*16
inline bool protein_frameshift(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  s.protein_prefix();
  char ref = 0;
  std::int64_t p = 0;
  Span rs, ps;
  if (!residue(s, ref, rs, false) || !s.position(p, ps)) return false;
  d.position = p;
  d.ref_allele = std::string(1, ref);
  d.edit = EditKind::kFrameshift;
  m.components = Components{rs, std::nullopt, ps};
  if (!s.lit("fs")) {
    char alt = 0;
    Span as;
    if (!residue(s, alt, as, false) || !s.lit("fs")) return false;
    d.alt_allele = std::string(1, alt);
    m.components.mutant = as;
  }
  // Optional new-stop distance, not kept in the descriptor.
  const std::size_t save = s.pos();
  if (s.lit("*") || s.lit("X") || s.lit("Ter")) {
    while (chars::is_digit(s.peek())) s.seek(s.pos() + 1);
    if (!s.at_boundary()) s.seek(save);
  }
  return true;
}

// P799, p.P799
inline bool protein_allele_one_letter(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  s.protein_prefix();
  char ref = 0;
  std::int64_t p = 0;
  Span rs, ps;
  if (!s.aa1(ref, rs, false) || !s.position(p, ps)) return false;
  d.position = p;
  d.ref_allele = std::string(1, ref);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, std::nullopt, ps};
  return true;
}

// Cys326, p.Cys326
inline bool protein_allele_three_letter(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  s.protein_prefix();
  char ref = 0;
  std::int64_t p = 0;
  Span rs, ps;
  if (!s.aa3(ref, rs, false) || !s.position(p, ps)) return false;
  d.position = p;
  d.ref_allele = std::string(1, ref);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, std::nullopt, ps};
  return true;
}

// glutamine at codon 659
inline bool protein_allele_prose(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  char ref = 0;
  std::int64_t p = 0;
  Span rs, ps;
  if (!s.aa_full(ref, rs) || ref == '*' || !s.spaces() || !s.word("at") || !s.spaces())
    return false;
  if (!s.word("codon") && !s.word("position") && !s.word("residue")) return false;
  if (!s.spaces() || !s.position(p, ps)) return false;
  d.position = p;
  d.ref_allele = std::string(1, ref);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, std::nullopt, ps};
  return true;
}

// methionine to threonine
inline bool protein_change_names(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  char ref = 0, alt = 0;
  Span rs, as;
  if (!s.aa_full(ref, rs) || ref == '*' || !s.change_separator() || !s.aa_full(alt, as))
    return false;
  d.ref_allele = std::string(1, ref);
  d.alt_allele = std::string(1, alt);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, std::nullopt};
  return true;
}

// Met>Thr, Met to Thr
inline bool protein_change_three_letter(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  char ref = 0, alt = 0;
  Span rs, as;
  if (!s.aa3(ref, rs, false) || !s.change_separator() || !s.aa3(alt, as, true)) return false;
  d.ref_allele = std::string(1, ref);
  d.alt_allele = std::string(1, alt);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, std::nullopt};
  return true;
}

// p.M>T
inline bool protein_change_canonical(Scanner& s, Match& m) {
  auto& d = variant(m);
  d.level = SequenceLevel::kProtein;
  if (!s.protein_prefix()) return s.fail("'p.'");
  char ref = 0, alt = 0;
  Span rs, as;
  if (!s.aa1(ref, rs, false) || !s.lit(">") || !s.aa1(alt, as, true)) return false;
  d.ref_allele = std::string(1, ref);
  d.alt_allele = std::string(1, alt);
  d.edit = EditKind::kSubstitution;
  m.components = Components{rs, as, std::nullopt};
  return true;
}

// --- prose ---

inline constexpr std::array<std::string_view, 20> kNumberWords = {
    "one",     "two",     "three",     "four",     "five",    "six",      "seven",
    "eight",   "nine",    "ten",       "eleven",   "twelve",  "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
};

inline bool quantity(Scanner& s, std::int64_t& value) {
  if (chars::is_digit(s.peek())) {
    if (s.peek() == '0') return s.fail("non-zero quantity");
    Span span;
    return s.coordinate(value, span);
  }
  // Longest first so "seventeen" is not read as "seven".
  std::size_t best = 0;
  for (std::size_t i = 0; i < kNumberWords.size(); ++i) {
    const auto w = kNumberWords[i];
    if (w.size() > best && chars::iequals(s.text().substr(s.pos(), w.size()), w) &&
        !chars::is_alpha(s.pos() + w.size() < s.text().size() ? s.text()[s.pos() + w.size()]
                                                              : '\0')) {
      best = w.size();
      value = static_cast<std::int64_t>(i) + 1;
    }
  }
  if (!best) return s.fail("quantity");
  s.seek(s.pos() + best);
  return true;
}

inline bool size_unit(Scanner& s, SizeUnit& unit) {
  struct UnitWord {
    std::string_view word;
    SizeUnit unit;
  };
  static constexpr std::array<UnitWord, 13> kUnits = {{
      {"nucleotides", SizeUnit::kNucleotide},
      {"nucleotide", SizeUnit::kNucleotide},
      {"base pairs", SizeUnit::kBasePair},
      {"base pair", SizeUnit::kBasePair},
      {"base-pairs", SizeUnit::kBasePair},
      {"base-pair", SizeUnit::kBasePair},
      {"bp", SizeUnit::kBasePair},
      {"amino acids", SizeUnit::kAminoAcid},
      {"amino acid", SizeUnit::kAminoAcid},
      {"amino-acids", SizeUnit::kAminoAcid},
      {"amino-acid", SizeUnit::kAminoAcid},
      {"codons", SizeUnit::kCodon},
      {"codon", SizeUnit::kCodon},
  }};
  for (const auto& u : kUnits) {
    if (s.word(u.word)) {
      unit = u.unit;
      return true;
    }
  }
  return s.fail("size unit");
}

// nine-nucleotide deletion starting at position 1952; 306 base pair insertion
inline bool prose_edit(Scanner& s, Match& m) {
  auto& d = variant(m);
  std::int64_t size = 0;
  SizeUnit unit{};
  if (!quantity(s, size)) return false;
  if (!s.lit("-") && !s.spaces()) return false;
  if (!size_unit(s, unit)) return false;
  if (!s.lit("-") && !s.spaces()) return false;
  if (s.word("deletion")) {
    d.edit = EditKind::kDeletion;
  } else if (s.word("insertion")) {
    d.edit = EditKind::kInsertion;
  } else if (s.word("duplication")) {
    d.edit = EditKind::kDuplication;
  } else {
    return false;
  }
  d.size = size;
  d.size_unit = unit;
  d.level = unit == SizeUnit::kAminoAcid || unit == SizeUnit::kCodon ? SequenceLevel::kProtein
                                                                     : SequenceLevel::kUnspecified;
  const std::size_t save = s.pos();
  std::int64_t p = 0;
  Span ps;
  bool clause = s.spaces();
  if (clause && (s.word("starting") || s.word("beginning"))) clause = s.spaces();
  if (clause && s.word("at") && s.spaces() && s.word("position") && s.spaces() &&
      s.position(p, ps) && s.at_boundary()) {
    d.position = p;
    m.components.position = ps;
  } else {
    s.seek(save);
  }
  return true;
}

// --- chromosomes and regions ---

inline bool chromosome_prefix(Scanner& s) {
  const std::size_t save = s.pos();
  if (s.ilit("chromosome")) return true;
  s.seek(save);
  if (s.ilit("chr")) return true;
  s.seek(save);
  return false;
}

// 1-22, X, Y; with_mito adds M and MT.
inline bool chromosome_label(Scanner& s, std::string& out, bool with_mito) {
  const char c = s.peek();
  if (c == 'X' || c == 'Y') {
    out.assign(1, c);
    s.seek(s.pos() + 1);
    return true;
  }
  if (with_mito && c == 'M') {
    const bool mt = s.peek(1) == 'T';
    out = mt ? "MT" : "M";
    s.seek(s.pos() + out.size());
    return true;
  }
  if (!chars::is_digit(c) || c == '0') return s.fail("chromosome number");
  int v = c - '0';
  std::size_t len = 1;
  if (chars::is_digit(s.peek(1)) && v * 10 + (s.peek(1) - '0') <= 22) {
    v = v * 10 + (s.peek(1) - '0');
    len = 2;
  }
  out = std::to_string(v);
  s.seek(s.pos() + len);
  return true;
}

// 10q11.12, Xp22.1, chromosome 5 q 33, chr5q33
inline bool chromosome_band(Scanner& s, Match& m) {
  auto& r = region(m);
  const bool prefixed = chromosome_prefix(s);
  if (prefixed) s.opt_spaces();
  if (!chromosome_label(s, r.chromosome, false)) return false;
  if (prefixed) s.opt_spaces();
  const char arm = s.peek();
  if (arm != 'p' && arm != 'q') return s.fail("chromosome arm p or q");
  s.seek(s.pos() + 1);
  if (prefixed) s.opt_spaces();
  const std::size_t band_start = s.pos();
  if (!chars::is_digit(s.peek())) return s.fail("band number");
  while (chars::is_digit(s.peek())) s.seek(s.pos() + 1);
  if (s.peek() == '.' && chars::is_digit(s.peek(1))) {
    s.seek(s.pos() + 1);
    while (chars::is_digit(s.peek())) s.seek(s.pos() + 1);
  }
  r.arm_band = std::string(1, arm) + std::string(s.text().substr(band_start, s.pos() - band_start));
  r.kind = RegionKind::kChromosomeBand;
  return true;
}

// chr7:156583796-156584569, Chr 15: 3,18,33,000-3,74,77,000
inline bool coordinate_range(Scanner& s, RegionDescriptor& r) {
  if (!chromosome_prefix(s)) return s.fail("'chr' or 'chromosome'");
  s.opt_spaces();
  if (!chromosome_label(s, r.chromosome, true)) return false;
  s.opt_spaces();
  if (!s.lit(":")) return false;
  s.opt_spaces();
  std::int64_t a = 0, b = 0;
  Span as, bs;
  if (!s.coordinate(a, as)) return false;
  s.opt_spaces();
  const std::size_t save = s.pos();
  if (!s.lit("-")) {
    s.seek(save);
    if (!s.lit("\xE2\x80\x93")) return s.fail("'-'");
  }
  s.opt_spaces();
  if (!s.coordinate(b, bs)) return false;
  if (b < a) return s.fail("end coordinate >= start");
  r.start_bp = a;
  r.end_bp = b;
  return true;
}

inline bool genomic_region(Scanner& s, Match& m) {
  auto& r = region(m);
  if (!coordinate_range(s, r)) return false;
  r.kind = RegionKind::kBpRegion;
  return true;
}

// <range> [bp] deletion|del|duplication|dup
inline bool copy_number_variant(Scanner& s, Match& m) {
  auto& r = region(m);
  if (!coordinate_range(s, r)) return false;
  s.opt_spaces();
  {
    const std::size_t save = s.pos();
    if (!s.word("bp")) s.seek(save);
  }
  s.opt_spaces();
  for (auto [w, kind] : {std::pair{"deletion", RegionKind::kCnvDel},
                         std::pair{"del", RegionKind::kCnvDel},
                         std::pair{"duplication", RegionKind::kCnvDup},
                         std::pair{"dup", RegionKind::kCnvDup}}) {
    if (s.word(w)) {
      r.kind = kind;
      return true;
    }
  }
  return s.fail("deletion or duplication");
}

// --- accessions ---

// rs763780, Rs763780
inline bool snp_id(Scanner& s, Match& m) {
  if (!s.ilit("rs")) return false;
  std::int64_t v = 0;
  Span span;
  if (!s.position(v, span)) return false;
  m.descriptor = Accession{"rs" + std::string(s.text().substr(span.start, span.size())), ""};
  return true;
}

// NM_203475.1
inline bool refseq_id(Scanner& s, Match& m) {
  static constexpr std::array<std::string_view, 7> kPrefixes = {"NM", "NP", "NC", "NG",
                                                                "NR", "XM", "XP"};
  const std::size_t start = s.pos();
  const std::string_view head = s.text().substr(start, 2);
  bool ok = false;
  for (auto p : kPrefixes) ok = ok || head == p;
  if (!ok) return s.fail("RefSeq prefix");
  s.seek(start + 2);
  if (!s.lit("_")) return false;
  if (!chars::is_digit(s.peek())) return s.fail("accession number");
  while (chars::is_digit(s.peek())) s.seek(s.pos() + 1);
  if (s.peek() == '.' && chars::is_digit(s.peek(1))) {
    s.seek(s.pos() + 1);
    while (chars::is_digit(s.peek())) s.seek(s.pos() + 1);
  }
  m.descriptor = Accession{std::string(s.text().substr(start, s.pos() - start)), ""};
  return true;
}

template <std::size_t N>
std::optional<Match> longest(std::string_view text, std::size_t pos, Diagnostics* diag,
                             MentionType type, const std::array<Alternative, N>& alternatives) {
  std::optional<Match> best;
  for (Alternative alt : alternatives) {
    Scanner s(text, pos, diag);
    Match m;
    m.type = type;
    m.start = pos;
    if (!alt(s, m)) continue;
    if (!s.at_boundary()) {
      s.fail("word boundary");
      continue;
    }
    m.end = s.pos();
    if (!best || m.end > best->end) best = std::move(m);
  }
  if (best) {
    const std::string raw(text.substr(best->start, best->end - best->start));
    std::visit([&](auto& d) { d.raw = raw; }, best->descriptor);
  }
  return best;
}

}  // namespace detail

// Longest match of `type` starting exactly at `pos` and ending on a word
// boundary, or nothing.
inline std::optional<Match> match_at(MentionType type, std::string_view text, std::size_t pos,
                                     Diagnostics* diag = nullptr) {
  using namespace detail;
  switch (type) {
    case MentionType::kSnp:
      return longest<1>(text, pos, diag, type, {snp_id});
    case MentionType::kDnaMutation:
      return longest<2>(text, pos, diag, type, {dna_substitution, dna_indel});
    case MentionType::kDnaAllele:
      return longest<1>(text, pos, diag, type, {dna_allele});
    case MentionType::kDnaChange:
      return longest<2>(text, pos, diag, type, {dna_change_letters, dna_change_names});
    case MentionType::kProteinMutation:
      return longest<4>(text, pos, diag, type,
                        {protein_sub_one_letter, protein_sub_three_letter, protein_del_dup,
                         protein_frameshift});
    case MentionType::kProteinAllele:
      return longest<3>(text, pos, diag, type,
                        {protein_allele_one_letter, protein_allele_three_letter,
                         protein_allele_prose});
    case MentionType::kProteinChange:
      return longest<3>(text, pos, diag, type,
                        {protein_change_names, protein_change_three_letter,
                         protein_change_canonical});
    case MentionType::kOtherMutation:
      return longest<1>(text, pos, diag, type, {prose_edit});
    case MentionType::kCnv:
      return longest<1>(text, pos, diag, type, {copy_number_variant});
    case MentionType::kRefSeq:
      return longest<1>(text, pos, diag, type, {refseq_id});
    case MentionType::kChromosome:
      return longest<1>(text, pos, diag, type, {chromosome_band});
    case MentionType::kGenomicRegion:
      return longest<1>(text, pos, diag, type, {genomic_region});
  }
  return std::nullopt;
}

}  // namespace varlex::grammar
