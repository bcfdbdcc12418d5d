#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "varlex/errors.hpp"
#include "varlex/knowledge_base.hpp"
#include "varlex/recognizer.hpp"
#include "varlex/tokenizer.hpp"

namespace varlex {

// Allele-registry canonical allele, e.g. CA16602736.
struct CaId {
  std::string ca;
  bool operator==(const CaId&) const = default;
};
// rsID qualified by its specific allele, rendered rs113488022(T>A).
struct RsAllele {
  std::string rsid;
  std::string ref;
  std::string alt;
  bool operator==(const RsAllele&) const = default;
};
struct RsId {
  std::string rsid;
  bool operator==(const RsId&) const = default;
};
// Gene symbol plus canonical variant string, rendered "BRAF: c.1799T>A".
struct GeneAnchored {
  std::string gene;
  std::string hgvs;
  bool operator==(const GeneAnchored&) const = default;
};
struct Unnormalized {
  bool operator==(const Unnormalized&) const = default;
};

using NormalizedId = std::variant<CaId, RsAllele, RsId, GeneAnchored, Unnormalized>;

enum class IdTag { kCaId, kRsAllele, kRsId, kGeneAnchored, kUnnormalized };

inline IdTag tag_of(const NormalizedId& id) { return static_cast<IdTag>(id.index()); }

// 4 for CA IDs down to 0 for unnormalized.
inline int specificity(const NormalizedId& id) { return 4 - static_cast<int>(id.index()); }

inline std::string render(const NormalizedId& id) {
  struct Visitor {
    std::string operator()(const CaId& x) const { return x.ca; }
    std::string operator()(const RsAllele& x) const {
      return x.rsid + "(" + x.ref + ">" + x.alt + ")";
    }
    std::string operator()(const RsId& x) const { return x.rsid; }
    std::string operator()(const GeneAnchored& x) const { return x.gene + ": " + x.hgvs; }
    std::string operator()(const Unnormalized&) const { return "-"; }
  };
  return std::visit(Visitor{}, id);
}

// Inverse of render() for well-formed strings.
inline std::optional<NormalizedId> parse_normalized_id(std::string_view s) {
  if (s == "-") return Unnormalized{};
  if (detail::is_prefixed_number(s, "CA")) return CaId{std::string(s)};
  if (detail::is_prefixed_number(s, "rs")) return RsId{std::string(s)};
  if (s.size() > 2 && s.substr(0, 2) == "rs" && s.back() == ')') {
    const auto open = s.find('(');
    const auto gt = s.find('>', open);
    if (open != std::string_view::npos && gt != std::string_view::npos &&
        detail::is_prefixed_number(s.substr(0, open), "rs") && gt > open + 1 &&
        gt + 1 < s.size() - 1)
      return RsAllele{std::string(s.substr(0, open)), std::string(s.substr(open + 1, gt - open - 1)),
                      std::string(s.substr(gt + 1, s.size() - gt - 2))};
  }
  if (const auto sep = s.find(": "); sep != std::string_view::npos && sep > 0)
    return GeneAnchored{std::string(s.substr(0, sep)), std::string(s.substr(sep + 2))};
  return std::nullopt;
}

// Ordered preference over identifier kinds.
class NormalizationPolicy {
 public:
  NormalizationPolicy()
      : order_{IdTag::kCaId, IdTag::kRsAllele, IdTag::kRsId, IdTag::kGeneAnchored} {}
  explicit NormalizationPolicy(std::vector<IdTag> order) : order_(std::move(order)) {
    if (order_.empty()) throw Error("normalization policy is empty");
  }

  // Comma-separated tag names: caid, rs_allele, rsid, gene.
  static NormalizationPolicy parse(std::string_view list) {
    std::vector<IdTag> order;
    std::size_t begin = 0;
    while (begin <= list.size()) {
      auto comma = list.find(',', begin);
      if (comma == std::string_view::npos) comma = list.size();
      const auto name = list.substr(begin, comma - begin);
      IdTag tag;
      if (name == "caid") {
        tag = IdTag::kCaId;
      } else if (name == "rs_allele") {
        tag = IdTag::kRsAllele;
      } else if (name == "rsid") {
        tag = IdTag::kRsId;
      } else if (name == "gene") {
        tag = IdTag::kGeneAnchored;
      } else {
        throw Error("unknown normalization tag '" + std::string(name) +
                    "' (expected caid, rs_allele, rsid or gene)");
      }
      if (std::find(order.begin(), order.end(), tag) == order.end()) order.push_back(tag);
      begin = comma + 1;
    }
    return NormalizationPolicy(std::move(order));
  }

  const std::vector<IdTag>& order() const { return order_; }
  bool allows(IdTag t) const { return std::find(order_.begin(), order_.end(), t) != order_.end(); }

 private:
  std::vector<IdTag> order_;
};

struct Normalization {
  NormalizedId id = Unnormalized{};
  // Several knowledge-base records matched and rendered differently; the
  // lowest rsid was kept.
  bool ambiguous = false;
};

namespace detail {

inline std::optional<NormalizedId> from_record(const VariantRecord& r, const VariantDescriptor& d,
                                               const std::optional<std::string>& gene,
                                               const NormalizationPolicy& policy) {
  // Allele-specific identifiers need the mention to name its alternate allele.
  const bool allele_known = !d.is_incomplete();
  for (IdTag tag : policy.order()) {
    switch (tag) {
      case IdTag::kCaId:
        if (r.ca_id && allele_known) return CaId{*r.ca_id};
        break;
      case IdTag::kRsAllele:
        if (r.rsid && r.ref_allele && r.alt_allele && allele_known)
          return RsAllele{*r.rsid, *r.ref_allele, *r.alt_allele};
        break;
      case IdTag::kRsId:
        if (r.rsid) return RsId{*r.rsid};
        break;
      case IdTag::kGeneAnchored:
        return GeneAnchored{gene.value_or(r.gene), canonical_string(d)};
      case IdTag::kUnnormalized:
        break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Most specific identifier for `m` under `policy`: SNP mentions keep their
// rsID; other variants go through the knowledge base, then gene anchoring,
// else stay unnormalized. Regions and RefSeq accessions are unnormalized.
inline Normalization normalize_detailed(const Mention& m, const std::optional<std::string>& gene_context,
                                        const KnowledgeBase& kb,
                                        const NormalizationPolicy& policy = {}) {
  if (m.type == MentionType::kSnp) {
    if (const auto* id = m.identifier()) return {RsId{*id}, false};
  }
  const auto* d = m.variant();
  if (!d) return {};
  const auto records = kb.lookup(gene_context, *d);
  if (!records.empty()) {
    Normalization out;
    std::optional<std::string> first_render;
    for (const auto* r : records) {
      auto id = detail::from_record(*r, *d, gene_context, policy);
      if (!id) continue;
      const auto text = render(*id);
      if (!first_render) {
        first_render = text;
        out.id = std::move(*id);
      } else if (text != *first_render) {
        out.ambiguous = true;
      }
    }
    if (first_render) return out;
    return {};
  }
  if (gene_context && policy.allows(IdTag::kGeneAnchored))
    return {GeneAnchored{*gene_context, canonical_string(*d)}, false};
  return {};
}

inline NormalizedId normalize(const Mention& m, const std::optional<std::string>& gene_context,
                              const KnowledgeBase& kb, const NormalizationPolicy& policy = {}) {
  return normalize_detailed(m, gene_context, kb, policy).id;
}

// Gene for `m`: the fused-token gene if any, else the nearest gene mention in
// the same sentence, else the nearest preceding one. Distance is between span
// midpoints; ties go to the earlier gene.
inline std::optional<std::string> resolve_gene_context(const Mention& m,
                                                       std::span<const GeneMention> genes,
                                                       std::span<const Span> sentences) {
  if (m.fused_gene) return m.fused_gene;
  const auto twice_mid = [](std::size_t a, std::size_t b) { return static_cast<long long>(a + b); };
  const long long mid = twice_mid(m.start, m.end);
  auto nearest = [&](auto&& keep) -> const GeneMention* {
    const GeneMention* best = nullptr;
    long long best_dist = 0;
    for (const auto& g : genes) {
      if (!keep(g)) continue;
      const long long dist = std::llabs(twice_mid(g.start, g.end) - mid);
      if (!best || dist < best_dist || (dist == best_dist && g.start < best->start)) {
        best = &g;
        best_dist = dist;
      }
    }
    return best;
  };
  const auto sentence = std::find_if(sentences.begin(), sentences.end(), [&](const Span& s) {
    return s.start <= m.start && m.start < s.end;
  });
  if (sentence != sentences.end()) {
    if (const auto* g = nearest([&](const GeneMention& g) { return sentence->contains(Span{g.start, g.end}); }))
      return g->symbol;
  }
  if (const auto* g = nearest([&](const GeneMention& g) { return g.end <= m.start; }))
    return g->symbol;
  return std::nullopt;
}

inline std::optional<std::string> resolve_gene_context(const Mention& m,
                                                       std::span<const GeneMention> genes,
                                                       std::string_view doc_text) {
  const auto sentences = sentence_spans(doc_text);
  return resolve_gene_context(m, genes, std::span<const Span>(sentences));
}

}  // namespace varlex
