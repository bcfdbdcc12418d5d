#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "varlex/chars.hpp"

namespace varlex {

enum class TokenKind { kWord, kNumber, kPunct, kWhitespace, kMixed };

// A slice of the source text. Offsets are bytes, end exclusive.
struct Token {
  std::string_view text;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kPunct;

  bool operator==(const Token&) const = default;
};

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  bool contains(const Span& o) const noexcept { return start <= o.start && o.end <= end; }
  bool overlaps(const Span& o) const noexcept { return start < o.end && o.start < end; }
  bool operator==(const Span&) const = default;
};

// Splits `source` into WORD (letters), NUMBER (digits, digit-flanked commas
// included), MIXED (letters and digits), WHITESPACE runs and single PUNCT
// characters. A multi-byte UTF-8 sequence forms one PUNCT token. The tokens
// always concatenate back to `source`.
inline std::vector<Token> tokenize(std::string_view source) {
  using namespace chars;
  std::vector<Token> tokens;
  const std::size_t n = source.size();
  std::size_t i = 0;
  while (i < n) {
    const std::size_t start = i;
    TokenKind kind;
    const char c = source[i];
    if (is_space(c)) {
      while (i < n && is_space(source[i])) ++i;
      kind = TokenKind::kWhitespace;
    } else if (is_alnum(c)) {
      bool letters = false;
      bool digits = false;
      while (i < n) {
        const char d = source[i];
        if (is_alpha(d)) {
          letters = true;
        } else if (is_digit(d)) {
          digits = true;
        } else if (d == ',' && i > start && is_digit(source[i - 1]) && i + 1 < n &&
                   is_digit(source[i + 1])) {
          // digit grouping, e.g. 3,18,33,000
        } else {
          break;
        }
        ++i;
      }
      kind = letters && digits ? TokenKind::kMixed
             : letters         ? TokenKind::kWord
                               : TokenKind::kNumber;
    } else {
      std::size_t len = utf8_length(c);
      std::size_t j = 1;
      while (j < len && i + j < n && (static_cast<unsigned char>(source[i + j]) & 0xC0) == 0x80)
        ++j;
      i += j;
      kind = TokenKind::kPunct;
    }
    tokens.push_back(Token{source.substr(start, i - start), start, i, kind});
  }
  return tokens;
}

// Minimal sentence segmentation: a sentence ends after a period that is
// followed by whitespace and then an uppercase letter. Returned spans cover
// the whole text; trailing whitespace belongs to the preceding sentence.
inline std::vector<Span> sentence_spans(std::string_view text) {
  std::vector<Span> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '.') continue;
    std::size_t j = i + 1;
    while (j < text.size() && chars::is_space(text[j])) ++j;
    if (j > i + 1 && j < text.size() && chars::is_upper(text[j])) {
      out.push_back(Span{begin, j});
      begin = j;
      i = j - 1;
    }
  }
  if (begin < text.size() || out.empty()) out.push_back(Span{begin, text.size()});
  return out;
}

}  // namespace varlex
