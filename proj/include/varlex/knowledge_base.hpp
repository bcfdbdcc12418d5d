#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "varlex/errors.hpp"
#include "varlex/hgvs.hpp"
#include "varlex/variant.hpp"

namespace varlex {

// One row of the variant table: a dbSNP / allele-registry linkage.
struct VariantRecord {
  std::optional<std::string> rsid;
  std::optional<std::string> ca_id;
  std::string gene;
  std::optional<std::string> dna_hgvs;
  std::optional<std::string> protein_hgvs;
  std::optional<std::string> ref_allele;
  std::optional<std::string> alt_allele;

  bool operator==(const VariantRecord&) const = default;
};

inline constexpr std::string_view kKnowledgeBaseHeader =
    "rsid\tca_id\tgene\tdna_hgvs\tprotein_hgvs\tref\talt";

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;
using RowIndex = std::unordered_map<std::string, std::vector<std::size_t>, StringHash, std::equal_to<>>;

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const auto tab = line.find('\t', begin);
    out.push_back(line.substr(begin, tab == std::string_view::npos ? tab : tab - begin));
    if (tab == std::string_view::npos) break;
    begin = tab + 1;
  }
  return out;
}

inline bool is_prefixed_number(std::string_view s, std::string_view prefix) {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return false;
  return std::all_of(s.begin() + prefix.size(), s.end(), chars::is_digit);
}

// Numeric part of "rs123", for ordering.
inline std::uint64_t accession_number(std::string_view id) {
  std::uint64_t v = 0;
  for (char c : id)
    if (chars::is_digit(c)) v = v * 10 + static_cast<std::uint64_t>(c - '0');
  return v;
}

// Canonical string with the alternate allele dropped, or empty when the
// descriptor is not a positioned substitution.
inline std::string incomplete_key(VariantDescriptor d) {
  if (d.edit != EditKind::kSubstitution || !d.position || !d.ref_allele) return {};
  d.alt_allele.reset();
  return canonical_string(d);
}

}  // namespace detail

// Gene symbols for fused-token splitting and gene-context lookup.
// Matching is case-sensitive.
class GeneLexicon {
 public:
  GeneLexicon() = default;
  GeneLexicon(std::initializer_list<std::string_view> symbols) {
    for (auto s : symbols) add(s);
  }
  explicit GeneLexicon(const std::vector<std::string>& symbols) {
    for (const auto& s : symbols) add(s);
  }

  // One symbol per line; blank lines are skipped.
  static GeneLexicon parse(std::istream& in) {
    GeneLexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view s = line;
      while (!s.empty() && chars::is_space(s.back())) s.remove_suffix(1);
      while (!s.empty() && chars::is_space(s.front())) s.remove_prefix(1);
      if (s.empty()) continue;
      if (std::any_of(s.begin(), s.end(), chars::is_space))
        throw MalformedRow(line_no, 1, "gene symbol contains whitespace");
      lex.add(s);
    }
    return lex;
  }

  static GeneLexicon load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path.string());
    return parse(in);
  }

  void add(std::string_view symbol) {
    if (symbol.empty()) return;
    max_length_ = std::max(max_length_, symbol.size());
    symbols_.emplace(symbol);
  }

  bool contains(std::string_view symbol) const { return symbols_.find(symbol) != symbols_.end(); }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::size_t max_length() const { return max_length_; }

 private:
  detail::StringSet symbols_;
  std::size_t max_length_ = 0;
};

// Immutable, file-backed variant table with exact-match indexes on
// (gene, HGVS), HGVS alone, rsid, and incomplete-variant prefix keys.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  static KnowledgeBase parse(std::istream& in) {
    KnowledgeBase kb;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (!header_seen) {
        if (line != kKnowledgeBaseHeader)
          throw MalformedRow(line_no, 1, "expected header '" + std::string(kKnowledgeBaseHeader) + "'");
        header_seen = true;
        continue;
      }
      if (line.empty()) continue;
      kb.add(parse_row(line, line_no), line_no);
    }
    if (!header_seen) throw MalformedRow(1, 1, "missing header row");
    return kb;
  }

  static KnowledgeBase load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path.string());
    return parse(in);
  }

  // Validates one data row. Columns are numbered from 1.
  static VariantRecord parse_row(std::string_view line, std::size_t line_no) {
    const auto cells = detail::split_tabs(line);
    if (cells.size() != 7)
      throw MalformedRow(line_no, std::min<std::size_t>(cells.size(), 7) + (cells.size() < 7),
                         "expected 7 tab-separated columns, found " + std::to_string(cells.size()));
    auto opt = [](std::string_view s) -> std::optional<std::string> {
      if (s.empty()) return std::nullopt;
      return std::string(s);
    };
    VariantRecord r;
    r.rsid = opt(cells[0]);
    r.ca_id = opt(cells[1]);
    r.gene = std::string(cells[2]);
    r.dna_hgvs = opt(cells[3]);
    r.protein_hgvs = opt(cells[4]);
    r.ref_allele = opt(cells[5]);
    r.alt_allele = opt(cells[6]);

    if (r.rsid && !detail::is_prefixed_number(*r.rsid, "rs"))
      throw MalformedRow(line_no, 1, "rsid must look like rs<digits>");
    if (r.ca_id && !detail::is_prefixed_number(*r.ca_id, "CA"))
      throw MalformedRow(line_no, 2, "ca_id must look like CA<digits>");
    if (!r.rsid && !r.ca_id) throw MalformedRow(line_no, 1, "row has neither rsid nor ca_id");
    if (r.gene.empty() || std::any_of(r.gene.begin(), r.gene.end(), chars::is_space))
      throw MalformedRow(line_no, 3, "gene symbol missing or contains whitespace");
    if (!r.dna_hgvs && !r.protein_hgvs)
      throw MalformedRow(line_no, 4, "row has neither dna_hgvs nor protein_hgvs");
    check_hgvs(r.dna_hgvs, false, line_no, 4);
    check_hgvs(r.protein_hgvs, true, line_no, 5);
    for (auto [cell, col] : {std::pair{&r.ref_allele, 6}, std::pair{&r.alt_allele, 7}}) {
      if (*cell && !detail::over_alphabet(**cell, kNucleotideAlphabet))
        throw MalformedRow(line_no, static_cast<std::size_t>(col), "allele must be over ACGTU");
    }
    return r;
  }

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const std::vector<VariantRecord>& records() const { return records_; }

  // Records whose DNA or protein HGVS equals canonical_string(d), restricted
  // to `gene` when given. Substitutions without an alternate allele also match
  // through the prefix key ("p.V600" finds "p.V600E"). Ordered by rsid number;
  // records without an rsid come last.
  std::vector<const VariantRecord*> lookup(const std::optional<std::string>& gene,
                                           const VariantDescriptor& d) const {
    std::vector<std::size_t> rows;
    const std::string key = canonical_string(d);
    auto collect = [&](const detail::RowIndex& index, const std::string& k) {
      if (auto it = index.find(k); it != index.end())
        rows.insert(rows.end(), it->second.begin(), it->second.end());
    };
    if (gene) {
      collect(by_gene_hgvs_, *gene + '\t' + key);
      if (d.is_incomplete()) collect(by_gene_prefix_, *gene + '\t' + key);
    } else {
      collect(by_hgvs_, key);
      if (d.is_incomplete()) collect(by_prefix_, key);
    }
    return ordered(std::move(rows));
  }

  std::vector<const VariantRecord*> by_rsid(std::string_view rsid) const {
    std::vector<std::size_t> rows;
    if (auto it = by_rsid_.find(rsid); it != by_rsid_.end()) rows = it->second;
    return ordered(std::move(rows));
  }

 private:
  static void check_hgvs(const std::optional<std::string>& cell, bool protein,
                         std::size_t line_no, std::size_t column) {
    if (!cell) return;
    try {
      const auto d = parse_variant(*cell);
      if (d.is_protein() != protein)
        throw MalformedRow(line_no, column, protein ? "expected a protein-level HGVS string"
                                                    : "expected a nucleotide-level HGVS string");
      if (canonical_string(d) != *cell)
        throw MalformedRow(line_no, column, "HGVS not in canonical form (" + canonical_string(d) + ")");
    } catch (const ParseFailure& e) {
      throw MalformedRow(line_no, column, e.what());
    }
  }

  void add(VariantRecord r, std::size_t line_no) {
    const std::size_t row = records_.size();
    for (const auto* hgvs : {&r.dna_hgvs, &r.protein_hgvs}) {
      if (!*hgvs) continue;
      const std::string gene_key = r.gene + '\t' + **hgvs;
      if (auto it = by_gene_hgvs_.find(gene_key); it != by_gene_hgvs_.end()) {
        for (std::size_t other : it->second) {
          const auto& o = records_[other];
          if (o.rsid && r.rsid && *o.rsid != *r.rsid)
            throw DuplicateKey(line_no, r.gene + ":" + **hgvs);
        }
      }
      by_gene_hgvs_[gene_key].push_back(row);
      by_hgvs_[**hgvs].push_back(row);
      const std::string prefix = detail::incomplete_key(parse_variant(**hgvs));
      if (!prefix.empty() && prefix != **hgvs) {
        by_gene_prefix_[r.gene + '\t' + prefix].push_back(row);
        by_prefix_[prefix].push_back(row);
      }
    }
    if (r.rsid) by_rsid_[*r.rsid].push_back(row);
    records_.push_back(std::move(r));
  }

  std::vector<const VariantRecord*> ordered(std::vector<std::size_t> rows) const {
    std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
      const auto& ra = records_[a];
      const auto& rb = records_[b];
      if (ra.rsid.has_value() != rb.rsid.has_value()) return ra.rsid.has_value();
      if (ra.rsid) {
        const auto na = detail::accession_number(*ra.rsid);
        const auto nb = detail::accession_number(*rb.rsid);
        if (na != nb) return na < nb;
      }
      return a < b;
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<const VariantRecord*> out;
    out.reserve(rows.size());
    for (std::size_t r : rows) out.push_back(&records_[r]);
    return out;
  }

  std::vector<VariantRecord> records_;
  detail::RowIndex by_gene_hgvs_;
  detail::RowIndex by_hgvs_;
  detail::RowIndex by_gene_prefix_;
  detail::RowIndex by_prefix_;
  detail::RowIndex by_rsid_;
};

inline KnowledgeBase load_kb(const std::filesystem::path& path) { return KnowledgeBase::load(path); }

}  // namespace varlex
