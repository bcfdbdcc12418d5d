#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "varlex/errors.hpp"

namespace varlex {

// Standoff annotation. Offsets index Document::text().
struct Annotation {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
  std::string type_label;
  // Normalized identifier column; absent in five-column annotation lines.
  std::optional<std::string> norm_id;

  bool operator==(const Annotation&) const = default;
};

struct Document {
  std::string doc_id;
  std::string title;
  std::string abstract;
  std::vector<Annotation> annotations;

  // Title and abstract joined by one space; the coordinate system of annotations.
  std::string text() const { return title + " " + abstract; }

  bool operator==(const Document&) const = default;
};

namespace detail {

inline bool parse_offset(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// "<id>|<tag>|<rest>" -> (id, rest)
inline bool split_text_line(std::string_view line, char tag, std::string_view& id,
                            std::string_view& rest) {
  const auto bar = line.find('|');
  if (bar == std::string_view::npos || bar == 0 || bar + 2 >= line.size() ||
      line[bar + 1] != tag || line[bar + 2] != '|' ||
      line.substr(0, bar).find('\t') != std::string_view::npos)
    return false;
  id = line.substr(0, bar);
  rest = line.substr(bar + 3);
  return true;
}

}  // namespace detail

// Reads blank-line separated PubTator blocks: "<id>|t|<title>",
// "<id>|a|<abstract>", then "<id>\t<start>\t<end>\t<text>\t<type>[\t<id>]"
// annotation lines whose text must equal the slice at their offsets.
inline std::vector<Document> read_pubtator(std::istream& in) {
  std::vector<Document> docs;
  enum class State { kTitle, kAbstract, kAnnotations } state = State::kTitle;
  Document doc;
  std::string doc_text;
  std::string line;
  std::size_t line_no = 0;

  auto finish = [&] {
    docs.push_back(std::move(doc));
    doc = Document{};
    state = State::kTitle;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = line;
    std::string_view id, rest;
    if (l.empty()) {
      if (state == State::kAbstract) throw MalformedLine(line_no, "abstract line missing");
      if (state == State::kAnnotations) finish();
      continue;
    }
    if (state == State::kAnnotations && detail::split_text_line(l, 't', id, rest)) finish();
    switch (state) {
      case State::kTitle:
        if (!detail::split_text_line(l, 't', id, rest))
          throw MalformedLine(line_no, "expected '<id>|t|<title>'");
        doc.doc_id = std::string(id);
        doc.title = std::string(rest);
        state = State::kAbstract;
        break;
      case State::kAbstract:
        if (!detail::split_text_line(l, 'a', id, rest))
          throw MalformedLine(line_no, "expected '<id>|a|<abstract>'");
        if (id != doc.doc_id)
          throw MalformedLine(line_no, "abstract id '" + std::string(id) + "' does not match title id");
        doc.abstract = std::string(rest);
        doc_text = doc.text();
        state = State::kAnnotations;
        break;
      case State::kAnnotations: {
        std::vector<std::string_view> f;
        std::size_t begin = 0;
        while (true) {
          const auto tab = l.find('\t', begin);
          f.push_back(l.substr(begin, tab == std::string_view::npos ? tab : tab - begin));
          if (tab == std::string_view::npos) break;
          begin = tab + 1;
        }
        if (f.size() != 5 && f.size() != 6)
          throw MalformedLine(line_no, "annotation needs 5 or 6 tab-separated fields");
        if (f[0] != doc.doc_id)
          throw MalformedLine(line_no, "annotation id '" + std::string(f[0]) + "' outside its document");
        Annotation a;
        if (!detail::parse_offset(f[1], a.start) || !detail::parse_offset(f[2], a.end))
          throw MalformedLine(line_no, "offsets must be non-negative integers");
        a.text = std::string(f[3]);
        a.type_label = std::string(f[4]);
        if (f.size() == 6) a.norm_id = std::string(f[5]);
        if (a.end < a.start || a.end > doc_text.size())
          throw OffsetMismatch(doc.doc_id, a.start, a.end, "span outside document text");
        if (std::string_view(doc_text).substr(a.start, a.end - a.start) != a.text)
          throw OffsetMismatch(doc.doc_id, a.start, a.end,
                               "annotation text '" + a.text + "' differs from '" +
                                   doc_text.substr(a.start, a.end - a.start) + "'");
        doc.annotations.push_back(std::move(a));
        break;
      }
    }
  }
  if (state == State::kAbstract) throw MalformedLine(line_no, "abstract line missing");
  if (state == State::kAnnotations) finish();
  return docs;
}

inline std::vector<Document> read_pubtator(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_pubtator(in);
}

// Each block is followed by one blank line; LF line endings.
inline void write_pubtator(std::ostream& out, const std::vector<Document>& docs) {
  for (const auto& d : docs) {
    out << d.doc_id << "|t|" << d.title << '\n' << d.doc_id << "|a|" << d.abstract << '\n';
    for (const auto& a : d.annotations) {
      out << d.doc_id << '\t' << a.start << '\t' << a.end << '\t' << a.text << '\t' << a.type_label;
      if (a.norm_id) out << '\t' << *a.norm_id;
      out << '\n';
    }
    out << '\n';
  }
}

inline std::string write_pubtator(const std::vector<Document>& docs) {
  std::ostringstream out;
  write_pubtator(out, docs);
  return out.str();
}

}  // namespace varlex
