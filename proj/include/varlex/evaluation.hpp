#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "varlex/pubtator.hpp"

namespace varlex {

enum class EvalMode {
  kMentionSpan,  // (doc, start, end)
  kMentionType,  // (doc, start, end, type label)
  kNormId,       // set of identifier strings per document
};

inline std::optional<EvalMode> parse_eval_mode(std::string_view s) {
  if (s == "span") return EvalMode::kMentionSpan;
  if (s == "type") return EvalMode::kMentionType;
  if (s == "id") return EvalMode::kNormId;
  return std::nullopt;
}

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static EvalReport from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
    EvalReport r{tp, fp, fn};
    // With nothing predicted (or nothing to find) the ratio is vacuous: 1 when
    // the other side is empty too, else 0.
    r.precision = tp + fp > 0 ? double(tp) / double(tp + fp) : (fn == 0 ? 1.0 : 0.0);
    r.recall = tp + fn > 0 ? double(tp) / double(tp + fn) : (fp == 0 ? 1.0 : 0.0);
    r.f1 = r.precision + r.recall > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
    return r;
  }

  // "tp=2 fp=1 fn=2 P=0.6667 R=0.5000 F=0.5714"
  std::string format() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "tp=%zu fp=%zu fn=%zu P=%.4f R=%.4f F=%.4f", tp, fp, fn,
                  precision, recall, f1);
    return buf;
  }
};

namespace detail {

inline std::vector<std::string> eval_keys(const Document& d, EvalMode mode) {
  std::vector<std::string> keys;
  if (mode == EvalMode::kNormId) {
    std::set<std::string> ids;
    for (const auto& a : d.annotations)
      if (a.norm_id && !a.norm_id->empty() && *a.norm_id != "-") ids.insert(*a.norm_id);
    keys.assign(ids.begin(), ids.end());
    return keys;
  }
  for (const auto& a : d.annotations) {
    std::string k = std::to_string(a.start) + ':' + std::to_string(a.end);
    if (mode == EvalMode::kMentionType) k += ':' + a.type_label;
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

// Micro-averaged scores of `predicted` against `gold`. Span modes match
// annotations as multisets; identifier mode compares per-document sets of
// identifier strings, ignoring "-" and empty ids.
inline EvalReport evaluate(const std::vector<Document>& gold, const std::vector<Document>& predicted,
                           EvalMode mode) {
  std::map<std::string, std::vector<std::string>> g, p;
  auto gather = [&](const std::vector<Document>& docs, auto& into) {
    for (const auto& d : docs) {
      auto keys = detail::eval_keys(d, mode);
      auto& slot = into[d.doc_id];
      slot.insert(slot.end(), keys.begin(), keys.end());
    }
    for (auto& [id, keys] : into) {
      std::sort(keys.begin(), keys.end());
      if (mode == EvalMode::kNormId) keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
  };
  gather(gold, g);
  gather(predicted, p);

  std::size_t tp = 0, fp = 0, fn = 0;
  for (const auto& [id, gk] : g) {
    const auto it = p.find(id);
    if (it == p.end()) {
      fn += gk.size();
      continue;
    }
    std::vector<std::string> common;
    std::set_intersection(gk.begin(), gk.end(), it->second.begin(), it->second.end(),
                          std::back_inserter(common));
    tp += common.size();
    fn += gk.size() - common.size();
    fp += it->second.size() - common.size();
  }
  for (const auto& [id, pk] : p)
    if (!g.count(id)) fp += pk.size();
  return EvalReport::from_counts(tp, fp, fn);
}

}  // namespace varlex
