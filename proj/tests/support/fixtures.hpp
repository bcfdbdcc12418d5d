#pragma once

// Generators and independent oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "varlex/varlex.hpp"

namespace varlex::fixtures {

inline std::string data_path(const std::string& name) { return std::string(VARLEX_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline KnowledgeBase kb_from_rows(const std::vector<std::string>& rows) {
  std::string text(kKnowledgeBaseHeader);
  text += '\n';
  for (const auto& r : rows) text += r + '\n';
  std::istringstream in(text);
  return KnowledgeBase::parse(in);
}

inline VariantDescriptor substitution(SequenceLevel level, std::optional<std::int64_t> position,
                                      std::optional<std::string> ref, std::optional<std::string> alt) {
  VariantDescriptor d;
  d.level = level;
  d.position = position;
  d.ref_allele = std::move(ref);
  d.alt_allele = std::move(alt);
  d.edit = EditKind::kSubstitution;
  return d;
}

// ---------------------------------------------------------------------------
// Random descriptors covering every VariantDescriptor shape the grammar reads.

class DescriptorGenerator {
 public:
  explicit DescriptorGenerator(std::uint64_t seed) : rng_(seed) {}

  VariantDescriptor next() {
    switch (pick(9)) {
      case 0: return nucleotide_substitution();
      case 1: return nucleotide_allele();
      case 2: return nucleotide_change();
      case 3: return nucleotide_indel();
      case 4: return protein_substitution();
      case 5: return protein_allele();
      case 6: return protein_change();
      case 7: return protein_edit();
      default: return sized_edit();
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::int64_t position() {
    // Mix of short and long coordinates.
    return pick(4) == 0 ? std::uniform_int_distribution<std::int64_t>(1, 99)(rng_)
                        : std::uniform_int_distribution<std::int64_t>(1, 9'999'999)(rng_);
  }
  std::string nt() { return std::string(1, "ACGT"[pick(4)]); }
  std::string nts(std::size_t max) {
    std::string s;
    for (std::size_t i = 0, n = 1 + pick(max); i < n; ++i) s += nt();
    return s;
  }
  std::string aa(bool allow_stop) {
    static constexpr std::string_view kResidues = "ACDEFGHIKLMNPQRSTVWY";
    if (allow_stop && pick(10) == 0) return "*";
    return std::string(1, kResidues[pick(kResidues.size())]);
  }
  SequenceLevel nucleotide_level() {
    static constexpr std::array kLevels{SequenceLevel::kCoding, SequenceLevel::kGenomic, SequenceLevel::kRna,
                                        SequenceLevel::kMito};
    return kLevels[pick(kLevels.size())];
  }

  VariantDescriptor nucleotide_substitution() {
    VariantDescriptor d;
    d.level = nucleotide_level();
    d.position = position();
    d.ref_allele = nt();
    d.alt_allele = nt();
    d.edit = EditKind::kSubstitution;
    return d;
  }
  VariantDescriptor nucleotide_allele() {
    auto d = nucleotide_substitution();
    d.alt_allele.reset();
    return d;
  }
  VariantDescriptor nucleotide_change() {
    VariantDescriptor d;
    d.level = SequenceLevel::kUnspecified;
    d.ref_allele = nt();
    d.alt_allele = nt();
    d.edit = EditKind::kSubstitution;
    return d;
  }
  VariantDescriptor nucleotide_indel() {
    VariantDescriptor d;
    d.level = nucleotide_level();
    d.position = position();
    if (pick(2)) d.position_end = *d.position + static_cast<std::int64_t>(1 + pick(20));
    static constexpr std::array kEdits{EditKind::kDeletion, EditKind::kInsertion, EditKind::kDuplication};
    d.edit = kEdits[pick(kEdits.size())];
    if (d.edit == EditKind::kInsertion) {
      d.alt_allele = nts(6);
    } else if (pick(2)) {
      d.ref_allele = nts(6);
    }
    return d;
  }
  VariantDescriptor protein_substitution() {
    VariantDescriptor d;
    d.level = SequenceLevel::kProtein;
    d.position = position();
    d.ref_allele = aa(false);
    d.alt_allele = aa(true);
    d.edit = EditKind::kSubstitution;
    return d;
  }
  VariantDescriptor protein_allele() {
    auto d = protein_substitution();
    d.alt_allele.reset();
    return d;
  }
  VariantDescriptor protein_change() {
    VariantDescriptor d;
    d.level = SequenceLevel::kProtein;
    d.ref_allele = aa(false);
    d.alt_allele = aa(true);
    d.edit = EditKind::kSubstitution;
    return d;
  }
  VariantDescriptor protein_edit() {
    VariantDescriptor d;
    d.level = SequenceLevel::kProtein;
    d.position = position();
    d.ref_allele = aa(false);
    static constexpr std::array kEdits{EditKind::kDeletion, EditKind::kDuplication, EditKind::kFrameshift};
    d.edit = kEdits[pick(kEdits.size())];
    if (d.edit == EditKind::kFrameshift && pick(2)) d.alt_allele = aa(false);
    return d;
  }
  VariantDescriptor sized_edit() {
    VariantDescriptor d;
    static constexpr std::array kUnits{SizeUnit::kNucleotide, SizeUnit::kBasePair, SizeUnit::kAminoAcid,
                                       SizeUnit::kCodon};
    static constexpr std::array kEdits{EditKind::kDeletion, EditKind::kInsertion, EditKind::kDuplication};
    d.size_unit = kUnits[pick(kUnits.size())];
    d.size = static_cast<std::int64_t>(1 + pick(400));
    d.edit = kEdits[pick(kEdits.size())];
    d.level = (*d.size_unit == SizeUnit::kAminoAcid || *d.size_unit == SizeUnit::kCodon)
                  ? SequenceLevel::kProtein
                  : SequenceLevel::kUnspecified;
    if (pick(2)) d.position = position();
    return d;
  }

  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Grouping oracle: the link rules restated directly over raw KB rows, closed
// transitively with Warshall's algorithm.

struct OracleRow {
  std::string gene, dna, protein;
};

inline bool oracle_ids_conflict(const NormalizedId& a, const NormalizedId& b) {
  const auto ra = render(a), rb = render(b);
  if (ra == "-" || rb == "-" || ra == rb) return false;
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<GeneAnchored>(a)) {
    const auto& x = std::get<GeneAnchored>(a);
    const auto& y = std::get<GeneAnchored>(b);
    if (x.gene != y.gene) return true;
    // Same gene: compatible only when one HGVS string extends the other by its alternate allele.
    const auto& shorter = x.hgvs.size() < y.hgvs.size() ? x.hgvs : y.hgvs;
    const auto& longer = x.hgvs.size() < y.hgvs.size() ? y.hgvs : x.hgvs;
    if (longer.compare(0, shorter.size(), shorter) != 0) return true;
    const auto rest = longer.substr(shorter.size());
    const bool dna_alt = rest.size() == 2 && rest[0] == '>';
    const bool protein_alt = rest.size() == 1 && shorter.rfind("p.", 0) == 0 &&
                             std::isdigit(static_cast<unsigned char>(shorter.back()));
    return !(dna_alt || protein_alt);
  }
  return true;
}

inline bool oracle_linked(const Mention& x, const Mention& y, const NormalizedId& ix, const NormalizedId& iy,
                          const std::optional<std::string>& gx, const std::optional<std::string>& gy,
                          const std::vector<OracleRow>& rows) {
  if (render(ix) != "-" && render(ix) == render(iy)) return true;
  const auto* a = x.variant();
  const auto* b = y.variant();
  if (!a || !b) return false;
  const bool a_complete = !(a->edit == EditKind::kSubstitution && a->position && !a->alt_allele);
  const bool b_complete = !(b->edit == EditKind::kSubstitution && b->position && !b->alt_allele);
  if (a_complete && b_complete && (a->level == SequenceLevel::kProtein) != (b->level == SequenceLevel::kProtein)) {
    const auto ca = canonical_string(*a), cb = canonical_string(*b);
    for (const auto& r : rows) {
      const bool hit_a = (r.dna == ca || r.protein == ca) && (!gx || *gx == r.gene);
      const bool hit_b = (r.dna == cb || r.protein == cb) && (!gy || *gy == r.gene);
      if (hit_a && hit_b) return true;
    }
  }
  const bool subs = a->edit == EditKind::kSubstitution && b->edit == EditKind::kSubstitution && !a->size &&
                    !b->size;
  if (subs && a->level == b->level && a->position && a->position == b->position && a->ref_allele &&
      a->ref_allele == b->ref_allele && (a->alt_allele.has_value() != b->alt_allele.has_value())) {
    const bool genes_ok = !gx || !gy || *gx == *gy;
    return genes_ok && !oracle_ids_conflict(ix, iy);
  }
  return false;
}

// Component label per mention: the smallest index reachable from it.
inline std::vector<std::size_t> oracle_components(const std::vector<Mention>& mentions,
                                                  const std::vector<NormalizedId>& ids,
                                                  const std::vector<std::optional<std::string>>& genes,
                                                  const std::vector<OracleRow>& rows) {
  const std::size_t n = mentions.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      reach[i][j] = i == j || oracle_linked(mentions[i], mentions[j], ids[i], ids[j], genes[i], genes[j], rows);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        label[i] = j;
        break;
      }
  return label;
}

inline std::vector<std::size_t> labels_of(const std::vector<VariantGroup>& groups, std::size_t n) {
  std::vector<std::size_t> label(n, n);
  for (const auto& g : groups) {
    const auto first = *std::min_element(g.members.begin(), g.members.end());
    for (auto i : g.members) label[i] = first;
  }
  return label;
}

// A random grouping scenario: up to `max_mentions` mentions drawn from a small
// pool of related variants so links are frequent.
struct GroupingCase {
  std::vector<Mention> mentions;
  std::vector<NormalizedId> ids;
  std::vector<std::optional<std::string>> genes;
  KnowledgeBase kb;
  std::vector<OracleRow> rows;
};

inline GroupingCase random_grouping_case(std::mt19937_64& rng, std::size_t max_mentions = 20) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  struct Site {
    std::string gene;
    int dna_pos;
    char dna_ref;
    int prot_pos;
    char prot_ref;
  };
  static const std::array<Site, 3> kSites{Site{"BRAF", 1799, 'T', 600, 'V'}, Site{"KRAS", 35, 'G', 12, 'G'},
                                          Site{"TRPV4", 2396, 'C', 799, 'P'}};
  static constexpr std::string_view kAlts = "ADEKLT";
  static constexpr std::string_view kNts = "ACGT";

  GroupingCase c;
  std::vector<std::string> kb_rows;
  int rs = 100;
  for (const auto& s : kSites) {
    for (std::size_t k = 0, n = pick(3); k < n; ++k) {
      const char prot_alt = kAlts[pick(kAlts.size())];
      char dna_alt = kNts[pick(kNts.size())];
      if (dna_alt == s.dna_ref) dna_alt = 'A' == s.dna_ref ? 'C' : 'A';
      const std::string dna = "c." + std::to_string(s.dna_pos) + s.dna_ref + ">" + dna_alt;
      const std::string prot = "p." + std::string(1, s.prot_ref) + std::to_string(s.prot_pos) + prot_alt;
      const std::string rsid = pick(4) ? "rs" + std::to_string(rs++) : "";
      const std::string ca = pick(2) || rsid.empty() ? "CA" + std::to_string(rs++) : "";
      const bool with_dna = pick(3) != 0;
      const std::string row = rsid + "\t" + ca + "\t" + s.gene + "\t" + (with_dna ? dna : "") + "\t" + prot +
                              "\t" + (with_dna ? std::string(1, s.dna_ref) : "") + "\t" +
                              (with_dna ? std::string(1, dna_alt) : "");
      try {
        auto trial = kb_rows;
        trial.push_back(row);
        kb_from_rows(trial);  // skip rows that would duplicate a key
        kb_rows = std::move(trial);
        c.rows.push_back(OracleRow{s.gene, with_dna ? dna : "", prot});
      } catch (const DuplicateKey&) {
      }
    }
  }
  c.kb = kb_from_rows(kb_rows);

  const std::size_t n = 1 + pick(max_mentions);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = kSites[pick(kSites.size())];
    std::string surface;
    switch (pick(4)) {
      case 0: surface = std::string(1, s.prot_ref) + std::to_string(s.prot_pos) + kAlts[pick(kAlts.size())]; break;
      case 1: surface = std::string(1, s.prot_ref) + std::to_string(s.prot_pos); break;
      case 2: surface = "c." + std::to_string(s.dna_pos) + s.dna_ref + ">" + kNts[pick(kNts.size())]; break;
      default: surface = "c." + std::to_string(s.dna_pos) + s.dna_ref; break;
    }
    const auto parsed = classify(surface);
    Mention m;
    m.doc_id = "g";
    m.start = i * 20;
    m.end = m.start + surface.size();
    m.text = surface;
    m.type = parsed.type;
    m.descriptor = parsed.descriptor;
    std::optional<std::string> gene;
    if (pick(3)) gene = pick(4) ? s.gene : kSites[pick(kSites.size())].gene;
    c.ids.push_back(normalize(m, gene, c.kb));
    c.mentions.push_back(std::move(m));
    c.genes.push_back(gene);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Synthetic documents.

inline const std::vector<std::string>& variant_surfaces() {
  static const std::vector<std::string> kSurfaces{
      "c.1799T>A", "p.V600E", "V600E", "rs113488022", "p.Gln659Leu", "c.35G>A", "G12D", "P799L", "P799",
      "1976A", "A>T", "methionine to threonine", "glutamine at codon 659", "306 base pair insertion",
      "NM_203475.1", "10q11.12", "chr7:156583796-156584569", "chr19:54,666,173-54,677,766 bp del",
      "c.1799_1801delTTG", "p.F508del", "BRAFV600E", "nine-nucleotide deletion starting at position 1952"};
  return kSurfaces;
}

inline const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> kWords{
      "patients", "with", "the", "mutation", "were", "treated", "and", "showed", "reduced", "tumor",
      "growth", "in", "a", "cohort", "of", "carriers", "expression", "analysis", "revealed", "that",
      "this", "variant", "is", "associated", "disease", "risk", "we", "observed", "BRAF", "KRAS",
      "TRPV4", "protein", "function", "was", "impaired", "by", "substitution", "at", "position"};
  return kWords;
}

// A ~`target`-byte abstract: sentences of filler words with variant surfaces mixed in.
inline std::string synthetic_abstract(std::mt19937_64& rng, std::size_t target = 1500) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const auto& words = filler_words();
  const auto& variants = variant_surfaces();
  std::string out;
  while (out.size() < target) {
    std::string sentence = "We";
    for (std::size_t i = 0, n = 8 + pick(10); i < n; ++i) {
      sentence += ' ';
      sentence += pick(6) == 0 ? variants[pick(variants.size())] : words[pick(words.size())];
    }
    out += sentence + ". ";
  }
  out.pop_back();
  return out;
}

inline std::vector<Document> synthetic_documents(std::size_t count, std::uint64_t seed, std::size_t target = 1500) {
  std::mt19937_64 rng(seed);
  std::vector<Document> docs;
  docs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    docs.push_back(Document{std::to_string(30000000 + i), "Variant study " + std::to_string(i),
                            synthetic_abstract(rng, target), {}});
  return docs;
}

// Documents with random but offset-consistent annotations, some without an
// identifier column.
inline std::vector<Document> synthetic_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::vector<Document> docs;
  for (std::size_t i = 0; i < count; ++i) {
    Document d{"PMID" + std::to_string(1000 + i), "Title " + std::to_string(i) + " on BRAF",
               synthetic_abstract(rng, 200 + pick(600)), {}};
    const auto text = d.text();
    std::size_t pos = 0;
    while (true) {
      const auto start = pos + pick(40);
      const auto end = start + 1 + pick(15);
      if (end > text.size()) break;
      std::optional<std::string> id;
      switch (pick(4)) {
        case 0: id = "rs" + std::to_string(pick(1'000'000)); break;
        case 1: id = "CA" + std::to_string(pick(1'000'000)); break;
        case 2: id = "-"; break;
        default: break;
      }
      d.annotations.push_back(Annotation{start, end, text.substr(start, end - start),
                                         std::string(type_label(kAllMentionTypes[pick(kAllMentionTypes.size())])),
                                         id});
      pos = end + pick(5);
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace varlex::fixtures
