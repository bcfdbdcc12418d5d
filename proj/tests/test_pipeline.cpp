#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace varlex;

namespace {

Pipeline fixture_pipeline(bool grouping = true) {
  PipelineConfig config;
  config.kb_path = fixtures::data_path("kb.tsv");
  config.gene_lexicon_path = fixtures::data_path("genes.txt");
  config.enable_grouping = grouping;
  return Pipeline::from_config(config);
}

std::vector<Document> stripped(std::vector<Document> docs) {
  for (auto& d : docs) d.annotations.clear();
  return docs;
}

}  // namespace

TEST(Pipeline, FusedGeneNormalizesToCaId) {
  const auto out = fixture_pipeline().annotate(Document{"d", "", "The BRAFV600E mutation was found.", {}});
  ASSERT_EQ(out.document.annotations.size(), 1u);
  const auto& a = out.document.annotations[0];
  EXPECT_EQ(a.text, "V600E");
  EXPECT_EQ(a.type_label, "ProteinMutation");
  EXPECT_EQ(a.norm_id, "CA123643");
}

TEST(Pipeline, ReproducesMiniGoldCorpus) {
  const auto gold = read_pubtator(fixtures::slurp(fixtures::data_path("gold.pubtator")));
  const auto pred = fixture_pipeline().annotate_all(stripped(gold));
  for (auto mode : {EvalMode::kMentionSpan, EvalMode::kMentionType, EvalMode::kNormId})
    EXPECT_EQ(evaluate(gold, pred, mode).f1, 1.0) << evaluate(gold, pred, mode).format();
  EXPECT_EQ(pred, gold);
}

TEST(Pipeline, GroupingCanBeDisabled) {
  const Document doc{"d", "TRPV4", "P799L was found. P799 was also found.", {}};
  const auto grouped = fixture_pipeline(true).annotate(doc);
  const auto plain = fixture_pipeline(false).annotate(doc);
  ASSERT_EQ(plain.document.annotations.size(), 2u);
  EXPECT_EQ(grouped.document.annotations[1].norm_id, "rs121912637");
  EXPECT_EQ(plain.document.annotations[1].norm_id, "rs121912637");  // prefix key lookup, same rsid
  EXPECT_EQ(grouped.groups.size(), 1u);
  EXPECT_EQ(plain.groups.size(), 2u);
}

TEST(Pipeline, FlagsAmbiguityAndUnnormalized) {
  std::istringstream rows(std::string(kKnowledgeBaseHeader) + "\nrs20\t\tBRAF\t\tp.V600E\t\t\nrs10\t\tKRAS\t\tp.V600E\t\t\n");
  const Pipeline p(KnowledgeBase::parse(rows), GeneLexicon{}, NormalizationPolicy::parse("rsid"));
  const auto out = p.annotate(Document{"d", "", "V600E and NM_203475.1", {}});
  ASSERT_EQ(out.flags.size(), 2u);
  EXPECT_EQ(out.flags[0], std::vector<AnnotationFlag>{AnnotationFlag::kAmbiguousRecord});
  EXPECT_EQ(out.flags[1], std::vector<AnnotationFlag>{AnnotationFlag::kUnnormalized});
}

TEST(Pipeline, ThreadCountInvariance) {
  const auto docs = fixtures::synthetic_documents(200, 3, 600);
  const auto p = fixture_pipeline();
  const auto one = write_pubtator(p.annotate_all(docs, 1));
  EXPECT_EQ(write_pubtator(p.annotate_all(docs, 4)), one);
  EXPECT_EQ(write_pubtator(p.annotate_all(docs, 7)), one);
  EXPECT_EQ(write_pubtator(p.annotate_all(docs, 1)), one);
}

TEST(Pipeline, EveryMentionGetsOneId) {
  const auto p = fixture_pipeline();
  for (const auto& doc : fixtures::synthetic_documents(30, 4, 800)) {
    const auto out = p.annotate(doc);
    EXPECT_EQ(out.ids.size(), out.mentions.size());
    EXPECT_EQ(out.document.annotations.size(), out.mentions.size());
    for (const auto& a : out.document.annotations) EXPECT_TRUE(a.norm_id && !a.norm_id->empty());
  }
}

TEST(Pipeline, PlainTextDocuments) {
  std::istringstream in("first V600E line\n\n   \nsecond line\n");
  const auto docs = documents_from_text(in);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].doc_id, "doc1");
  EXPECT_EQ(docs[1].doc_id, "doc2");
  EXPECT_EQ(docs[0].title, "");
  EXPECT_EQ(docs[0].abstract, "first V600E line");
  const auto out = fixture_pipeline().annotate(docs[0]);
  ASSERT_EQ(out.document.annotations.size(), 1u);
  EXPECT_EQ(out.document.annotations[0].start, 7u);  // abstract origin is 1 for an empty title
}
