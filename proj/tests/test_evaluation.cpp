#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace varlex;

namespace {

Annotation ann(std::size_t s, std::size_t e, std::string type = "ProteinMutation", std::string id = "-") {
  return Annotation{s, e, "", std::move(type), std::move(id)};
}

Document doc(std::string id, std::vector<Annotation> anns) { return Document{std::move(id), "", "", std::move(anns)}; }

}  // namespace

TEST(Evaluate, SelfMatchIsPerfect) {
  const auto corpus = fixtures::synthetic_corpus(20, 3);
  for (auto mode : {EvalMode::kMentionSpan, EvalMode::kMentionType, EvalMode::kNormId}) {
    const auto r = evaluate(corpus, corpus, mode);
    EXPECT_EQ(r.precision, 1.0);
    EXPECT_EQ(r.recall, 1.0);
    EXPECT_EQ(r.f1, 1.0);
  }
}

TEST(Evaluate, HandCountedCase) {
  const auto gold = doc("d", {ann(0, 1), ann(2, 3), ann(4, 5), ann(6, 7)});
  const auto pred = doc("d", {ann(0, 1), ann(2, 3), ann(8, 9)});
  const auto r = evaluate({gold}, {pred}, EvalMode::kMentionSpan);
  EXPECT_EQ(r.tp, 2u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_EQ(r.fn, 2u);
  EXPECT_DOUBLE_EQ(r.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  EXPECT_DOUBLE_EQ(r.f1, 4.0 / 7.0);
  EXPECT_EQ(r.format(), "tp=2 fp=1 fn=2 P=0.6667 R=0.5000 F=0.5714");
}

TEST(Evaluate, EmptyPredictions) {
  const auto r = evaluate({doc("d", {ann(0, 1)})}, {}, EvalMode::kMentionSpan);
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f1, 0.0);
  EXPECT_EQ(r.fn, 1u);
}

TEST(Evaluate, TypeModeNeedsLabel) {
  const auto gold = doc("d", {ann(0, 1, "SNP")});
  const auto pred = doc("d", {ann(0, 1, "DNAMutation")});
  EXPECT_EQ(evaluate({gold}, {pred}, EvalMode::kMentionSpan).tp, 1u);
  EXPECT_EQ(evaluate({gold}, {pred}, EvalMode::kMentionType).tp, 0u);
}

TEST(Evaluate, IdModeCollapsesDuplicatesAndSkipsDash) {
  const auto gold = doc("d", {ann(0, 1, "X", "rs1"), ann(5, 6, "X", "rs1"), ann(7, 8, "X", "-")});
  const auto pred = doc("d", {ann(9, 10, "X", "rs1"), ann(11, 12, "X", "rs2")});
  const auto r = evaluate({gold}, {pred}, EvalMode::kNormId);
  EXPECT_EQ(r.tp, 1u);
  EXPECT_EQ(r.fp, 1u);
  EXPECT_EQ(r.fn, 0u);
}

TEST(Evaluate, MissingDocumentCountsAsFalseNegatives) {
  const auto r = evaluate({doc("a", {ann(0, 1)}), doc("b", {ann(0, 1), ann(1, 2)})}, {doc("a", {ann(0, 1)})},
                          EvalMode::kMentionSpan);
  EXPECT_EQ(r.tp, 1u);
  EXPECT_EQ(r.fn, 2u);
}

TEST(Evaluate, SpanTpIsSymmetricAndF1Bounded) {
  const auto a = fixtures::synthetic_corpus(15, 8);
  const auto b = fixtures::synthetic_corpus(15, 9);
  auto mixed = a;
  for (std::size_t i = 0; i < mixed.size(); i += 2) mixed[i] = b[i];
  for (const auto& [x, y] : {std::pair{a, b}, std::pair{a, mixed}}) {
    const auto r1 = evaluate(x, y, EvalMode::kMentionSpan);
    const auto r2 = evaluate(y, x, EvalMode::kMentionSpan);
    EXPECT_EQ(r1.tp, r2.tp);
    EXPECT_GE(r1.f1, 0.0);
    EXPECT_LE(r1.f1, 1.0);
    EXPECT_EQ(r1.f1 == 0.0, r1.tp == 0);
  }
}

TEST(EvalReport, FromCountsEdgeCases) {
  const auto none = EvalReport::from_counts(0, 0, 0);
  EXPECT_EQ(none.precision, 1.0);
  EXPECT_EQ(none.recall, 1.0);
  EXPECT_EQ(none.f1, 1.0);
  EXPECT_EQ(EvalReport::from_counts(0, 3, 0).precision, 0.0);
  EXPECT_EQ(EvalReport::from_counts(0, 3, 0).recall, 0.0);
  EXPECT_EQ(parse_eval_mode("id"), EvalMode::kNormId);
  EXPECT_FALSE(parse_eval_mode("bogus"));
}
