#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "varlex/hgvs.hpp"
#include "varlex/knowledge_base.hpp"
#include "varlex/normalizer.hpp"
#include "varlex/recognizer.hpp"
#include "varlex/union_find.hpp"

namespace varlex {

struct VariantGroup {
  std::vector<std::size_t> members;  // ascending mention indices
  NormalizedId group_id = Unnormalized{};
  // Members carry conflicting identifiers (e.g. V600E and V600K joined through V600).
  bool ambiguous = false;

  bool operator==(const VariantGroup&) const = default;
};

// True iff both are substitutions at the same level and position with equal
// reference alleles and exactly one alternate allele missing (P799 vs P799L).
inline bool is_prefix_compatible(const VariantDescriptor& a, const VariantDescriptor& b) {
  if (a.edit != EditKind::kSubstitution || b.edit != EditKind::kSubstitution) return false;
  if (a.size || b.size) return false;
  if (a.level != b.level || !a.position || a.position != b.position) return false;
  if (!a.ref_allele || a.ref_allele != b.ref_allele) return false;
  return a.alt_allele.has_value() != b.alt_allele.has_value();
}

// Two identifiers of the same kind that name different things. Gene-anchored
// ids in one gene agree when one HGVS part is the incomplete form of the other
// ("BRAF: p.V600" and "BRAF: p.V600E").
inline bool ids_conflict(const NormalizedId& a, const NormalizedId& b) {
  if (std::holds_alternative<Unnormalized>(a) || std::holds_alternative<Unnormalized>(b)) return false;
  if (a.index() != b.index() || a == b) return false;
  if (const auto* ga = std::get_if<GeneAnchored>(&a)) {
    const auto& gb = std::get<GeneAnchored>(b);
    if (ga->gene != gb.gene) return true;
    try {
      return !is_prefix_compatible(parse_variant(ga->hgvs), parse_variant(gb.hgvs));
    } catch (const Error&) {
      return true;
    }
  }
  return true;
}

// Everything the pairwise link rule looks at, precomputed per mention.
class LinkContext {
 public:
  LinkContext(std::span<const Mention> mentions, std::span<const NormalizedId> ids,
              const KnowledgeBase& kb, std::span<const std::optional<std::string>> genes)
      : mentions_(mentions), ids_(ids), genes_(genes.begin(), genes.end()) {
    if (ids_.size() != mentions_.size()) throw Error("one identifier per mention required");
    genes_.resize(mentions_.size());
    records_.resize(mentions_.size());
    for (std::size_t i = 0; i < mentions_.size(); ++i) {
      const auto* d = mentions_[i].variant();
      if (!d || d->is_incomplete()) continue;
      records_[i] = kb.lookup(genes_[i], *d);
      std::sort(records_[i].begin(), records_[i].end());
    }
  }

  std::size_t size() const { return mentions_.size(); }

  // (a) same identifier; (b) same record reached from the DNA and the protein
  // side; (c) incomplete/complete pair at the same residue with compatible
  // genes and non-conflicting identifiers.
  bool linked(std::size_t i, std::size_t j) const {
    if (i == j) return true;
    if (!std::holds_alternative<Unnormalized>(ids_[i]) && ids_[i] == ids_[j]) return true;
    const auto* a = mentions_[i].variant();
    const auto* b = mentions_[j].variant();
    if (!a || !b) return false;
    if (a->is_protein() != b->is_protein() && !records_[i].empty() && !records_[j].empty()) {
      std::vector<const VariantRecord*> shared;
      std::set_intersection(records_[i].begin(), records_[i].end(), records_[j].begin(),
                            records_[j].end(), std::back_inserter(shared));
      if (!shared.empty()) return true;
    }
    if (is_prefix_compatible(*a, *b)) {
      const bool genes_ok = !genes_[i] || !genes_[j] || *genes_[i] == *genes_[j];
      return genes_ok && !ids_conflict(ids_[i], ids_[j]);
    }
    return false;
  }

 private:
  std::span<const Mention> mentions_;
  std::span<const NormalizedId> ids_;
  std::vector<std::optional<std::string>> genes_;
  std::vector<std::vector<const VariantRecord*>> records_;
};

// Connected components of the link relation, each labelled with its most
// specific member identifier (ties: complete variants first, then lowest
// rendering). Groups are ordered by their first member.
inline std::vector<VariantGroup> group_mentions(std::span<const Mention> mentions,
                                                std::span<const NormalizedId> ids,
                                                const KnowledgeBase& kb,
                                                std::span<const std::optional<std::string>> genes = {}) {
  const LinkContext ctx(mentions, ids, kb, genes);
  UnionFind uf(mentions.size());
  for (std::size_t i = 0; i < mentions.size(); ++i)
    for (std::size_t j = i + 1; j < mentions.size(); ++j)
      if (ctx.linked(i, j)) uf.unite(i, j);

  std::map<std::size_t, std::size_t> root_to_group;
  std::vector<VariantGroup> groups;
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    const auto root = uf.find(i);
    auto [it, fresh] = root_to_group.emplace(root, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].members.push_back(i);
  }
  auto rank = [&](std::size_t i) {
    const auto* d = mentions[i].variant();
    const bool complete = !d || !d->is_incomplete();
    return std::tuple(-specificity(ids[i]), !complete, render(ids[i]));
  };
  for (auto& g : groups) {
    std::size_t best = g.members.front();
    auto best_rank = rank(best);
    for (std::size_t i : g.members) {
      auto r = rank(i);
      if (r < best_rank) {
        best = i;
        best_rank = std::move(r);
      }
    }
    g.group_id = ids[best];
    for (std::size_t x = 0; x < g.members.size() && !g.ambiguous; ++x)
      for (std::size_t y = x + 1; y < g.members.size(); ++y)
        if (ids_conflict(ids[g.members[x]], ids[g.members[y]])) {
          g.ambiguous = true;
          break;
        }
  }
  return groups;
}

// Per-mention identifiers after propagation: each member takes its group's
// identifier unless its own identifier conflicts with it.
inline std::vector<NormalizedId> propagate(std::span<const VariantGroup> groups,
                                           std::span<const NormalizedId> ids) {
  std::vector<NormalizedId> out(ids.begin(), ids.end());
  for (const auto& g : groups)
    for (std::size_t i : g.members)
      if (!ids_conflict(ids[i], g.group_id)) out[i] = g.group_id;
  return out;
}

}  // namespace varlex
