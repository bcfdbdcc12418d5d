#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "varlex/chars.hpp"
#include "varlex/errors.hpp"

namespace varlex {

// The twelve concept types the recognizer emits.
enum class MentionType {
  kSnp,
  kDnaMutation,
  kDnaAllele,
  kDnaChange,
  kProteinMutation,
  kProteinAllele,
  kProteinChange,
  kOtherMutation,
  kCnv,
  kRefSeq,
  kChromosome,
  kGenomicRegion,
};

inline constexpr std::array<MentionType, 12> kAllMentionTypes = {
    MentionType::kSnp,           MentionType::kDnaMutation,    MentionType::kDnaAllele,
    MentionType::kDnaChange,     MentionType::kProteinMutation, MentionType::kProteinAllele,
    MentionType::kProteinChange, MentionType::kOtherMutation,  MentionType::kCnv,
    MentionType::kRefSeq,        MentionType::kChromosome,     MentionType::kGenomicRegion,
};

// Upper-snake name, e.g. DNA_MUTATION.
inline std::string_view type_name(MentionType t) {
  switch (t) {
    case MentionType::kSnp: return "SNP";
    case MentionType::kDnaMutation: return "DNA_MUTATION";
    case MentionType::kDnaAllele: return "DNA_ALLELE";
    case MentionType::kDnaChange: return "DNA_CHANGE";
    case MentionType::kProteinMutation: return "PROTEIN_MUTATION";
    case MentionType::kProteinAllele: return "PROTEIN_ALLELE";
    case MentionType::kProteinChange: return "PROTEIN_CHANGE";
    case MentionType::kOtherMutation: return "OTHER_MUTATION";
    case MentionType::kCnv: return "CNV";
    case MentionType::kRefSeq: return "REFSEQ";
    case MentionType::kChromosome: return "CHROMOSOME";
    case MentionType::kGenomicRegion: return "GENOMIC_REGION";
  }
  return "";
}

// CamelCase label used in annotation files, e.g. DNAMutation.
inline std::string_view type_label(MentionType t) {
  switch (t) {
    case MentionType::kSnp: return "SNP";
    case MentionType::kDnaMutation: return "DNAMutation";
    case MentionType::kDnaAllele: return "DNAAllele";
    case MentionType::kDnaChange: return "DNAChange";
    case MentionType::kProteinMutation: return "ProteinMutation";
    case MentionType::kProteinAllele: return "ProteinAllele";
    case MentionType::kProteinChange: return "ProteinChange";
    case MentionType::kOtherMutation: return "OtherMutation";
    case MentionType::kCnv: return "CopyNumberVariant";
    case MentionType::kRefSeq: return "RefSeq";
    case MentionType::kChromosome: return "Chromosome";
    case MentionType::kGenomicRegion: return "GenomicRegion";
  }
  return "";
}

// Accepts either the upper-snake name or the CamelCase label.
inline std::optional<MentionType> parse_mention_type(std::string_view s) {
  for (MentionType t : kAllMentionTypes)
    if (s == type_name(t) || s == type_label(t)) return t;
  return std::nullopt;
}

// Rank used to break ties between equal spans; lower wins.
inline int type_priority(MentionType t) {
  switch (t) {
    case MentionType::kSnp: return 0;
    case MentionType::kDnaMutation: return 1;
    case MentionType::kProteinMutation: return 2;
    case MentionType::kCnv: return 3;
    case MentionType::kGenomicRegion: return 4;
    case MentionType::kRefSeq: return 5;
    case MentionType::kChromosome: return 6;
    case MentionType::kDnaAllele: return 7;
    case MentionType::kProteinAllele: return 8;
    case MentionType::kDnaChange: return 9;
    case MentionType::kProteinChange: return 10;
    case MentionType::kOtherMutation: return 11;
  }
  return 12;
}

enum class SequenceLevel { kCoding, kGenomic, kProtein, kRna, kMito, kUnspecified };

enum class EditKind {
  kSubstitution,
  kDeletion,
  kInsertion,
  kDuplication,
  kFrameshift,
  kUnspecified,
};

// Unit of a quantity in a prose description ("306 base pair insertion").
enum class SizeUnit { kNucleotide, kBasePair, kAminoAcid, kCodon };

inline std::string_view level_name(SequenceLevel l) {
  switch (l) {
    case SequenceLevel::kCoding: return "DNA_CODING";
    case SequenceLevel::kGenomic: return "DNA_GENOMIC";
    case SequenceLevel::kProtein: return "PROTEIN";
    case SequenceLevel::kRna: return "RNA";
    case SequenceLevel::kMito: return "MITO";
    case SequenceLevel::kUnspecified: return "UNSPECIFIED";
  }
  return "";
}

inline std::string_view level_prefix(SequenceLevel l) {
  switch (l) {
    case SequenceLevel::kCoding: return "c.";
    case SequenceLevel::kGenomic: return "g.";
    case SequenceLevel::kProtein: return "p.";
    case SequenceLevel::kRna: return "r.";
    case SequenceLevel::kMito: return "m.";
    case SequenceLevel::kUnspecified: return "";
  }
  return "";
}

inline std::string_view edit_name(EditKind e) {
  switch (e) {
    case EditKind::kSubstitution: return "SUBSTITUTION";
    case EditKind::kDeletion: return "DELETION";
    case EditKind::kInsertion: return "INSERTION";
    case EditKind::kDuplication: return "DUPLICATION";
    case EditKind::kFrameshift: return "FRAMESHIFT";
    case EditKind::kUnspecified: return "UNSPECIFIED";
  }
  return "";
}

inline std::string_view unit_name(SizeUnit u) {
  switch (u) {
    case SizeUnit::kNucleotide: return "nucleotide";
    case SizeUnit::kBasePair: return "bp";
    case SizeUnit::kAminoAcid: return "amino acid";
    case SizeUnit::kCodon: return "codon";
  }
  return "";
}

// Canonical structured form of a sequence variant.
//
// Position is the codon number at protein level and a nucleotide offset
// otherwise. Alleles are uppercase: nucleotides over ACGTU, residues as
// one-letter codes with '*' for stop. A descriptor with `size` set comes from
// a prose description and carries no alleles.
struct VariantDescriptor {
  SequenceLevel level = SequenceLevel::kUnspecified;
  std::optional<std::int64_t> position;
  std::optional<std::int64_t> position_end;
  std::optional<std::string> ref_allele;
  std::optional<std::string> alt_allele;
  EditKind edit = EditKind::kUnspecified;
  std::optional<std::int64_t> size;
  std::optional<SizeUnit> size_unit;
  std::string raw;

  bool operator==(const VariantDescriptor&) const = default;

  // Equality ignoring `raw`.
  bool same_variant(const VariantDescriptor& o) const {
    return level == o.level && position == o.position && position_end == o.position_end &&
           ref_allele == o.ref_allele && alt_allele == o.alt_allele && edit == o.edit &&
           size == o.size && size_unit == o.size_unit;
  }

  bool is_protein() const { return level == SequenceLevel::kProtein; }
  // Substitution lacking its alternate allele ("V600", "1976A").
  bool is_incomplete() const {
    return edit == EditKind::kSubstitution && position.has_value() && !alt_allele.has_value();
  }
};

enum class RegionKind { kChromosomeBand, kBpRegion, kCnvDel, kCnvDup };

inline std::string_view region_kind_name(RegionKind k) {
  switch (k) {
    case RegionKind::kChromosomeBand: return "CHROMOSOME_BAND";
    case RegionKind::kBpRegion: return "BP_REGION";
    case RegionKind::kCnvDel: return "CNV_DEL";
    case RegionKind::kCnvDup: return "CNV_DUP";
  }
  return "";
}

struct RegionDescriptor {
  std::string chromosome;
  std::optional<std::string> arm_band;
  std::optional<std::int64_t> start_bp;
  std::optional<std::int64_t> end_bp;
  RegionKind kind = RegionKind::kBpRegion;
  std::string raw;

  bool operator==(const RegionDescriptor&) const = default;
  bool same_region(const RegionDescriptor& o) const {
    return chromosome == o.chromosome && arm_band == o.arm_band && start_bp == o.start_bp &&
           end_bp == o.end_bp && kind == o.kind;
  }
};

// Database accession carried by SNP and RefSeq mentions.
struct Accession {
  std::string id;
  std::string raw;

  bool operator==(const Accession&) const = default;
};

using Descriptor = std::variant<VariantDescriptor, RegionDescriptor, Accession>;

// --- amino acids ----------------------------------------------------------

struct AminoAcid {
  char code;
  std::string_view three;
  std::string_view name;
};

// The twenty standard residues in one-letter alphabetical order.
inline constexpr std::array<AminoAcid, 20> kStandardAminoAcids = {{
    {'A', "Ala", "alanine"},       {'C', "Cys", "cysteine"},     {'D', "Asp", "aspartate"},
    {'E', "Glu", "glutamate"},     {'F', "Phe", "phenylalanine"}, {'G', "Gly", "glycine"},
    {'H', "His", "histidine"},     {'I', "Ile", "isoleucine"},   {'K', "Lys", "lysine"},
    {'L', "Leu", "leucine"},       {'M', "Met", "methionine"},   {'N', "Asn", "asparagine"},
    {'P', "Pro", "proline"},       {'Q', "Gln", "glutamine"},    {'R', "Arg", "arginine"},
    {'S', "Ser", "serine"},        {'T', "Thr", "threonine"},    {'V', "Val", "valine"},
    {'W', "Trp", "tryptophan"},    {'Y', "Tyr", "tyrosine"},
}};

// Alternative full names mapping to a standard residue.
struct ResidueAlias {
  std::string_view name;
  char code;
};
inline constexpr std::array<ResidueAlias, 5> kResidueAliases = {{
    {"aspartic acid", 'D'},
    {"glutamic acid", 'E'},
    {"selenocysteine", 'U'},
    {"stop", '*'},
    {"termination", '*'},
}};

inline constexpr std::string_view kProteinAlphabet = "ACDEFGHIKLMNPQRSTVWYU*";
inline constexpr std::string_view kNucleotideAlphabet = "ACGTU";

struct NucleotideName {
  std::string_view name;
  char code;
};
inline constexpr std::array<NucleotideName, 5> kNucleotideNames = {{
    {"adenine", 'A'},
    {"guanine", 'G'},
    {"cytosine", 'C'},
    {"thymine", 'T'},
    {"uracil", 'U'},
}};

// Maps a one-letter, three-letter or full residue name (any case) to its
// uppercase one-letter code. Ter/Stop/X map to '*', Sec to 'U'.
inline char normalize_amino_acid(std::string_view name) {
  if (name.size() == 1) {
    const char c = chars::to_upper(name[0]);
    if (c == 'X' || c == '*') return '*';
    for (const auto& aa : kStandardAminoAcids)
      if (aa.code == c) return c;
    throw UnknownResidue(std::string(name));
  }
  if (name.size() == 3) {
    if (chars::iequals(name, "Ter") || chars::iequals(name, "Stp")) return '*';
    if (chars::iequals(name, "Sec")) return 'U';
    for (const auto& aa : kStandardAminoAcids)
      if (chars::iequals(name, aa.three)) return aa.code;
  }
  for (const auto& aa : kStandardAminoAcids)
    if (chars::iequals(name, aa.name)) return aa.code;
  for (const auto& alias : kResidueAliases)
    if (chars::iequals(name, alias.name)) return alias.code;
  throw UnknownResidue(std::string(name));
}

inline std::string_view three_letter_code(char one) {
  if (one == '*') return "Ter";
  if (one == 'U') return "Sec";
  for (const auto& aa : kStandardAminoAcids)
    if (aa.code == one) return aa.three;
  throw UnknownResidue(std::string(1, one));
}

// --- validation and rendering ---------------------------------------------

namespace detail {

inline bool over_alphabet(const std::string& s, std::string_view alphabet) {
  if (s.empty()) return false;
  for (char c : s)
    if (alphabet.find(c) == std::string_view::npos) return false;
  return true;
}

}  // namespace detail

// Empty when `d` satisfies every descriptor invariant, else a description of
// the first violation.
inline std::string validation_error(const VariantDescriptor& d) {
  const bool protein = d.is_protein();
  const std::string_view alphabet = protein ? kProteinAlphabet : kNucleotideAlphabet;
  if (d.position && *d.position < 1) return "position must be >= 1";
  if (d.position_end && !d.position) return "position_end without position";
  if (d.position_end && *d.position_end < *d.position) return "position_end < position";
  if (d.ref_allele && !detail::over_alphabet(*d.ref_allele, alphabet)) return "bad ref allele";
  if (d.ref_allele && d.ref_allele->find('*') != std::string::npos) return "stop as reference";
  if (d.alt_allele && !detail::over_alphabet(*d.alt_allele, alphabet)) return "bad alt allele";
  if (d.size.has_value() != d.size_unit.has_value()) return "size and size_unit go together";

  const auto single = [](const std::optional<std::string>& a) { return !a || a->size() == 1; };

  if (d.size) {
    if (*d.size < 1) return "size must be >= 1";
    if (d.edit != EditKind::kDeletion && d.edit != EditKind::kInsertion &&
        d.edit != EditKind::kDuplication)
      return "sized edits are deletions, insertions or duplications";
    if (d.ref_allele || d.alt_allele || d.position_end) return "sized edits carry no alleles";
    const bool residue_unit =
        *d.size_unit == SizeUnit::kAminoAcid || *d.size_unit == SizeUnit::kCodon;
    const SequenceLevel want = residue_unit ? SequenceLevel::kProtein : SequenceLevel::kUnspecified;
    if (d.level != want) return "level does not match size unit";
    return {};
  }

  switch (d.edit) {
    case EditKind::kSubstitution:
      if (!d.ref_allele && !d.alt_allele) return "substitution needs an allele";
      if (d.position_end) return "substitution takes a single position";
      if (!single(d.ref_allele) || !single(d.alt_allele)) return "substitution alleles are single";
      if (d.position) {
        if (!d.ref_allele) return "positioned substitution needs a reference allele";
      } else {
        if (!d.ref_allele || !d.alt_allele) return "unpositioned change needs both alleles";
        if (d.level != SequenceLevel::kUnspecified && d.level != SequenceLevel::kProtein)
          return "unpositioned nucleotide change has no level";
      }
      return {};
    case EditKind::kDeletion:
    case EditKind::kDuplication:
      if (!d.position) return "edit needs a position";
      if (d.alt_allele) return "deletion/duplication has no alt allele";
      if (protein && (!d.ref_allele || d.ref_allele->size() != 1 || d.position_end))
        return "protein deletion/duplication names one residue";
      return {};
    case EditKind::kInsertion:
      if (protein) return "protein insertions are not supported";
      if (!d.position) return "edit needs a position";
      if (!d.alt_allele || d.ref_allele) return "insertion carries only an alt allele";
      return {};
    case EditKind::kFrameshift:
      if (!protein) return "frameshift is protein level";
      if (!d.position || !d.ref_allele || d.position_end) return "frameshift needs residue+position";
      if (!single(d.ref_allele) || !single(d.alt_allele)) return "frameshift alleles are single";
      return {};
    case EditKind::kUnspecified:
      return "edit kind unspecified";
  }
  return {};
}

inline bool is_valid(const VariantDescriptor& d) { return validation_error(d).empty(); }

inline std::string_view edit_word(EditKind e) {
  switch (e) {
    case EditKind::kDeletion: return "deletion";
    case EditKind::kInsertion: return "insertion";
    case EditKind::kDuplication: return "duplication";
    default: return "";
  }
}

// Deterministic HGVS-like rendering, e.g. "c.1799T>A", "p.V600E", "p.P799",
// "c.35delG", "p.F508del", "9 nucleotide deletion at position 1952".
inline std::string canonical_string(const VariantDescriptor& d) {
  if (auto err = validation_error(d); !err.empty())
    throw Error("invalid descriptor '" + d.raw + "': " + err);
  std::string out;
  if (d.size) {
    out = std::to_string(*d.size) + " " + std::string(unit_name(*d.size_unit)) + " " +
          std::string(edit_word(d.edit));
    if (d.position) out += " at position " + std::to_string(*d.position);
    return out;
  }
  out = level_prefix(d.level);
  const auto ref = d.ref_allele.value_or("");
  const auto alt = d.alt_allele.value_or("");
  auto range = [&] {
    std::string r = std::to_string(*d.position);
    if (d.position_end) r += "_" + std::to_string(*d.position_end);
    return r;
  };
  if (d.is_protein()) {
    switch (d.edit) {
      case EditKind::kSubstitution:
        if (!d.position) return out + ref + ">" + alt;
        return out + ref + std::to_string(*d.position) + alt;
      case EditKind::kDeletion: return out + ref + range() + "del";
      case EditKind::kDuplication: return out + ref + range() + "dup";
      case EditKind::kFrameshift: return out + ref + range() + alt + "fs";
      default: break;
    }
    return out;
  }
  switch (d.edit) {
    case EditKind::kSubstitution:
      if (d.position) out += std::to_string(*d.position);
      out += ref;
      if (d.alt_allele) out += ">" + alt;
      return out;
    case EditKind::kDeletion: return out + range() + "del" + ref;
    case EditKind::kInsertion: return out + range() + "ins" + alt;
    case EditKind::kDuplication: return out + range() + "dup" + ref;
    default: break;
  }
  return out;
}

inline std::string validation_error(const RegionDescriptor& r) {
  if (r.chromosome.empty()) return "chromosome label missing";
  if (r.kind == RegionKind::kChromosomeBand) {
    if (!r.arm_band || r.arm_band->empty()) return "band notation needs arm_band";
    if (r.start_bp || r.end_bp) return "band notation carries no coordinates";
    return {};
  }
  if (!r.start_bp || !r.end_bp) return "coordinate region needs start and end";
  if (*r.start_bp < 0) return "start_bp must be >= 0";
  if (*r.end_bp < *r.start_bp) return "end_bp < start_bp";
  return {};
}

inline bool is_valid(const RegionDescriptor& r) { return validation_error(r).empty(); }

// "10q11.12", "chr10:46123781-51028772", "chr15:31833000-37477000del".
inline std::string canonical_string(const RegionDescriptor& r) {
  if (auto err = validation_error(r); !err.empty())
    throw Error("invalid region '" + r.raw + "': " + err);
  if (r.kind == RegionKind::kChromosomeBand) return r.chromosome + *r.arm_band;
  std::string out = "chr" + r.chromosome + ":" + std::to_string(*r.start_bp) + "-" +
                    std::to_string(*r.end_bp);
  if (r.kind == RegionKind::kCnvDel) out += "del";
  if (r.kind == RegionKind::kCnvDup) out += "dup";
  return out;
}

inline std::string canonical_string(const Accession& a) { return a.id; }

inline std::string canonical_string(const Descriptor& d) {
  return std::visit([](const auto& x) { return canonical_string(x); }, d);
}

// The mention type whose grammar accepts canonical_string(d).
inline MentionType infer_type(const VariantDescriptor& d) {
  if (d.size) return MentionType::kOtherMutation;
  const bool protein = d.is_protein();
  if (d.edit == EditKind::kSubstitution) {
    if (!d.position) return protein ? MentionType::kProteinChange : MentionType::kDnaChange;
    if (!d.alt_allele) return protein ? MentionType::kProteinAllele : MentionType::kDnaAllele;
  }
  return protein ? MentionType::kProteinMutation : MentionType::kDnaMutation;
}

inline MentionType infer_type(const RegionDescriptor& r) {
  switch (r.kind) {
    case RegionKind::kChromosomeBand: return MentionType::kChromosome;
    case RegionKind::kBpRegion: return MentionType::kGenomicRegion;
    default: return MentionType::kCnv;
  }
}

}  // namespace varlex
