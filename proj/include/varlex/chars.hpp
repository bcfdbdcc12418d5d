#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// ASCII-only character predicates. Bytes >= 0x80 are never letters or digits.
namespace varlex::chars {

constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
constexpr bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
constexpr bool is_alpha(char c) noexcept { return is_upper(c) || is_lower(c); }
constexpr bool is_alnum(char c) noexcept { return is_alpha(c) || is_digit(c); }
constexpr bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

constexpr char to_upper(char c) noexcept { return is_lower(c) ? char(c - 'a' + 'A') : c; }
constexpr char to_lower(char c) noexcept { return is_upper(c) ? char(c - 'A' + 'a') : c; }

inline std::string to_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_upper(c);
  return out;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = to_lower(c);
  return out;
}

constexpr bool iequals(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (to_lower(a[i]) != to_lower(b[i])) return false;
  return true;
}

// Length of the UTF-8 sequence introduced by lead byte `c` (1 for ASCII or stray bytes).
constexpr std::size_t utf8_length(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0xF0 && u < 0xF8) return 4;
  if (u >= 0xE0) return u < 0xF0 ? 3 : 1;
  if (u >= 0xC0) return 2;
  return 1;
}

}  // namespace varlex::chars
