#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "varlex/evaluation.hpp"
#include "varlex/grouper.hpp"
#include "varlex/knowledge_base.hpp"
#include "varlex/normalizer.hpp"
#include "varlex/pubtator.hpp"
#include "varlex/recognizer.hpp"

namespace varlex {

struct PipelineConfig {
  std::optional<std::filesystem::path> kb_path;
  std::optional<std::filesystem::path> gene_lexicon_path;
  NormalizationPolicy policy;
  bool enable_grouping = true;
  EvalMode eval_mode = EvalMode::kNormId;
  std::size_t threads = 1;
};

enum class AnnotationFlag {
  kAmbiguousRecord,  // several knowledge-base records fit; lowest rsid kept
  kAmbiguousGroup,   // the mention's group joins conflicting identifiers
  kUnnormalized,
};

struct AnnotatedDocument {
  Document document;  // input text with predicted annotations
  std::vector<Mention> mentions;
  std::vector<std::optional<std::string>> gene_contexts;
  std::vector<NormalizedId> ids;  // after group propagation
  std::vector<VariantGroup> groups;
  std::vector<std::vector<AnnotationFlag>> flags;  // parallel to mentions
};

// recognize -> resolve gene -> normalize -> group, per document. Immutable
// and shareable across threads once built.
class Pipeline {
 public:
  Pipeline() = default;
  Pipeline(KnowledgeBase kb, GeneLexicon genes, NormalizationPolicy policy = {},
           bool enable_grouping = true)
      : kb_(std::move(kb)),
        recognizer_(std::move(genes)),
        policy_(std::move(policy)),
        grouping_(enable_grouping) {}

  static Pipeline from_config(const PipelineConfig& config) {
    KnowledgeBase kb = config.kb_path ? KnowledgeBase::load(*config.kb_path) : KnowledgeBase{};
    GeneLexicon genes =
        config.gene_lexicon_path ? GeneLexicon::load(*config.gene_lexicon_path) : GeneLexicon{};
    return Pipeline(std::move(kb), std::move(genes), config.policy, config.enable_grouping);
  }

  const KnowledgeBase& knowledge_base() const { return kb_; }
  const Recognizer& recognizer() const { return recognizer_; }

  AnnotatedDocument annotate(const Document& input) const {
    AnnotatedDocument out;
    out.document = input;
    out.document.annotations.clear();
    const std::string text = input.text();

    out.mentions = recognizer_.recognize(text, input.doc_id);
    const auto genes = recognizer_.find_genes(text);
    const auto sentences = sentence_spans(text);

    const std::size_t n = out.mentions.size();
    out.gene_contexts.reserve(n);
    out.flags.assign(n, {});
    std::vector<NormalizedId> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& m = out.mentions[i];
      out.gene_contexts.push_back(resolve_gene_context(m, genes, std::span<const Span>(sentences)));
      auto norm = normalize_detailed(m, out.gene_contexts.back(), kb_, policy_);
      if (norm.ambiguous) out.flags[i].push_back(AnnotationFlag::kAmbiguousRecord);
      ids.push_back(std::move(norm.id));
    }

    if (grouping_) {
      out.groups = group_mentions(out.mentions, ids, kb_, out.gene_contexts);
      out.ids = propagate(out.groups, ids);
      for (const auto& g : out.groups)
        if (g.ambiguous)
          for (std::size_t i : g.members) out.flags[i].push_back(AnnotationFlag::kAmbiguousGroup);
    } else {
      out.ids = std::move(ids);
      for (std::size_t i = 0; i < n; ++i) out.groups.push_back(VariantGroup{{i}, out.ids[i], false});
    }

    for (std::size_t i = 0; i < n; ++i) {
      const auto& m = out.mentions[i];
      if (std::holds_alternative<Unnormalized>(out.ids[i]))
        out.flags[i].push_back(AnnotationFlag::kUnnormalized);
      out.document.annotations.push_back(
          Annotation{m.start, m.end, m.text, std::string(type_label(m.type)), render(out.ids[i])});
    }
    return out;
  }

  // Annotates every document with `threads` workers. Output order equals
  // input order for any thread count.
  std::vector<Document> annotate_all(const std::vector<Document>& docs, std::size_t threads = 1) const {
    std::vector<Document> out(docs.size());
    std::vector<std::exception_ptr> errors(docs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < docs.size(); i = next++) {
        try {
          out[i] = annotate(docs[i]).document;
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    threads = std::max<std::size_t>(1, std::min(threads, docs.size()));
    if (threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (!errors[i]) continue;
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception& e) {
        throw Error("document " + docs[i].doc_id + ": " + e.what());
      }
    }
    return out;
  }

 private:
  KnowledgeBase kb_;
  Recognizer recognizer_;
  NormalizationPolicy policy_;
  bool grouping_ = true;
};

// Plain-text input: every non-blank line is one document with an empty
// title, named doc1, doc2, ... in input order.
inline std::vector<Document> documents_from_text(std::istream& in) {
  std::vector<Document> docs;
  std::string line;
  while (std::getline(in, line)) {
    if (std::all_of(line.begin(), line.end(), chars::is_space)) continue;
    docs.push_back(Document{"doc" + std::to_string(docs.size() + 1), "", line, {}});
  }
  return docs;
}

}  // namespace varlex
