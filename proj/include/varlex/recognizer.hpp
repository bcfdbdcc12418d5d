#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varlex/grammar.hpp"
#include "varlex/hgvs.hpp"
#include "varlex/knowledge_base.hpp"
#include "varlex/tokenizer.hpp"
#include "varlex/variant.hpp"

namespace varlex {

// A typed, offset-anchored variant mention.
struct Mention {
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
  MentionType type = MentionType::kDnaMutation;
  Components components;
  Descriptor descriptor;
  // Set when the mention was split off a gene-fused token such as "BRAFV600E".
  std::optional<std::string> fused_gene;

  Span span() const { return Span{start, end}; }

  const VariantDescriptor* variant() const { return std::get_if<VariantDescriptor>(&descriptor); }
  const RegionDescriptor* region() const { return std::get_if<RegionDescriptor>(&descriptor); }
  // Accession for SNP and RefSeq mentions.
  const std::string* identifier() const {
    const auto* a = std::get_if<Accession>(&descriptor);
    return a ? &a->id : nullptr;
  }

  bool operator==(const Mention&) const = default;
};

struct GeneMention {
  std::string symbol;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const GeneMention&) const = default;
};

// Result of splitting "BRAFV600E": gene and variant spans in source offsets,
// plus the variant match itself.
struct FusedSplit {
  Span gene;
  Span variant;
  grammar::Match match;
};

namespace detail {

inline void shift(grammar::Match& m, std::size_t by) {
  m.start += by;
  m.end += by;
  for (auto* c : {&m.components.wildtype, &m.components.mutant, &m.components.position})
    if (*c) {
      (*c)->start += by;
      (*c)->end += by;
    }
}

inline bool is_alnum_token(const Token& t) {
  return t.kind == TokenKind::kWord || t.kind == TokenKind::kNumber || t.kind == TokenKind::kMixed;
}

// Drops short bare forms that collide with figure labels and similar text:
// a bare DNA allele needs a 3-digit position ("1976A", not "5A"), a bare
// one-letter protein allele a 2-digit one ("P799", not "T1").
inline bool plausible(const grammar::Match& m) {
  const auto* d = std::get_if<VariantDescriptor>(&m.descriptor);
  if (!d || !d->position) return true;
  const std::string& raw = d->raw;
  if (m.type == MentionType::kDnaAllele && !raw.empty() && chars::is_digit(raw[0]))
    return *d->position >= 100;
  if (m.type == MentionType::kProteinAllele && raw.size() > 1 && chars::is_upper(raw[0]) &&
      chars::is_digit(raw[1]))
    return *d->position >= 10;
  return true;
}

}  // namespace detail

// Splits a letter-digit token into a leading gene symbol and a trailing
// protein or DNA mutation. The longest lexicon prefix whose remainder parses
// wins.
inline std::optional<FusedSplit> split_gene_fused(const Token& token, const GeneLexicon& lexicon) {
  if (token.kind != TokenKind::kMixed || lexicon.empty() || token.text.size() < 2)
    return std::nullopt;
  const std::size_t longest = std::min(token.text.size() - 1, lexicon.max_length());
  for (std::size_t len = longest; len >= 1; --len) {
    if (!lexicon.contains(token.text.substr(0, len))) continue;
    const std::string_view rest = token.text.substr(len);
    for (MentionType t : {MentionType::kProteinMutation, MentionType::kDnaMutation}) {
      auto m = grammar::match_at(t, rest, 0);
      if (!m || m->end != rest.size()) continue;
      detail::shift(*m, token.start + len);
      return FusedSplit{Span{token.start, token.start + len}, Span{token.start + len, token.end},
                        std::move(*m)};
    }
  }
  return std::nullopt;
}

// Deterministic pattern-based mention finder. Immutable after construction;
// recognize() may be called concurrently.
class Recognizer {
 public:
  Recognizer() = default;
  explicit Recognizer(GeneLexicon lexicon) : lexicon_(std::move(lexicon)) {}

  const GeneLexicon& lexicon() const { return lexicon_; }

  std::vector<Mention> recognize(std::string_view text, std::string_view doc_id = {}) const {
    return scan(text, doc_id, kAllMentionTypes);
  }

  // Mentions of the given types only, with the same overlap resolution.
  std::vector<Mention> scan(std::string_view text, std::string_view doc_id,
                            std::span<const MentionType> types) const {
    const auto tokens = tokenize(text);
    struct Candidate {
      grammar::Match match;
      std::optional<std::string> gene;
    };
    std::vector<Candidate> candidates;
    const bool want_fused =
        std::any_of(types.begin(), types.end(), [](MentionType t) {
          return t == MentionType::kProteinMutation || t == MentionType::kDnaMutation;
        });

    for (const Token& tok : tokens) {
      if (!detail::is_alnum_token(tok)) continue;
      for (MentionType t : types) {
        auto m = grammar::match_at(t, text, tok.start);
        if (m && detail::plausible(*m)) candidates.push_back({std::move(*m), std::nullopt});
      }
      if (want_fused && tok.kind == TokenKind::kMixed && !lexicon_.empty()) {
        if (auto split = split_gene_fused(tok, lexicon_)) {
          if (std::find(types.begin(), types.end(), split->match.type) != types.end())
            candidates.push_back(
                {std::move(split->match), std::string(text.substr(split->gene.start,
                                                                  split->gene.size()))});
        }
      }
    }

    // Longest first, then leftmost, then type priority.
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      const auto la = a.match.end - a.match.start;
      const auto lb = b.match.end - b.match.start;
      if (la != lb) return la > lb;
      if (a.match.start != b.match.start) return a.match.start < b.match.start;
      return type_priority(a.match.type) < type_priority(b.match.type);
    });
    std::vector<Candidate> kept;
    for (auto& c : candidates) {
      const Span s{c.match.start, c.match.end};
      const bool clash = std::any_of(kept.begin(), kept.end(), [&](const Candidate& k) {
        return s.overlaps(Span{k.match.start, k.match.end});
      });
      if (!clash) kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(),
              [](const Candidate& a, const Candidate& b) { return a.match.start < b.match.start; });

    std::vector<Mention> out;
    out.reserve(kept.size());
    for (auto& c : kept) {
      Mention m;
      m.doc_id = std::string(doc_id);
      m.start = c.match.start;
      m.end = c.match.end;
      m.text = std::string(text.substr(m.start, m.end - m.start));
      m.type = c.match.type;
      m.components = c.match.components;
      m.descriptor = std::move(c.match.descriptor);
      m.fused_gene = std::move(c.gene);
      out.push_back(std::move(m));
    }
    return out;
  }

  // Lexicon hits (longest symbol at each word start, possibly spanning
  // punctuation as in "HLA-B"), plus gene prefixes of fused tokens.
  std::vector<GeneMention> find_genes(std::string_view text) const {
    std::vector<GeneMention> out;
    if (lexicon_.empty()) return out;
    const auto tokens = tokenize(text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      if (!detail::is_alnum_token(tok)) continue;
      std::size_t best_end = 0;
      std::size_t best_j = i;
      for (std::size_t j = i; j < tokens.size(); ++j) {
        const std::size_t len = tokens[j].end - tok.start;
        if (len > lexicon_.max_length() || tokens[j].kind == TokenKind::kWhitespace) break;
        const bool boundary = tokens[j].end == text.size() || !chars::is_alnum(text[tokens[j].end]);
        if (boundary && lexicon_.contains(text.substr(tok.start, len))) {
          best_end = tokens[j].end;
          best_j = j;
        }
      }
      if (best_end) {
        out.push_back({std::string(text.substr(tok.start, best_end - tok.start)), tok.start, best_end});
        i = best_j;
        continue;
      }
      if (auto split = split_gene_fused(tok, lexicon_))
        out.push_back({std::string(text.substr(split->gene.start, split->gene.size())),
                       split->gene.start, split->gene.end});
    }
    return out;
  }

 private:
  GeneLexicon lexicon_;
};

// Recognition without a gene lexicon.
inline std::vector<Mention> recognize(std::string_view text) { return Recognizer{}.recognize(text); }

// Prose edits such as "nine-nucleotide deletion starting at position 1952".
inline std::vector<Mention> recognize_natural_language(std::string_view sentence) {
  static constexpr MentionType kTypes[] = {MentionType::kOtherMutation};
  return Recognizer{}.scan(sentence, {}, kTypes);
}

// Chromosome bands, coordinate ranges and copy-number variants.
inline std::vector<Mention> recognize_region(std::string_view text) {
  static constexpr MentionType kTypes[] = {MentionType::kChromosome, MentionType::kGenomicRegion,
                                           MentionType::kCnv};
  return Recognizer{}.scan(text, {}, kTypes);
}

}  // namespace varlex
