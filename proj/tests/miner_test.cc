// Copyright 2026 The CTRP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ctrp/miner.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ctrp/corpus.h"
#include "ctrp/disentangle.h"
#include "ctrp/lexicon.h"
#include "ctrp/synthetic.h"
#include "oracles.h"

namespace ctrp {
namespace {

std::string SpanText(const ComparativeMatch &m, size_t i) {
  return m.sentence.substr(m.spans[i].begin,
                           m.spans[i].end - m.spans[i].begin);
}

std::optional<ComparativeMatch> Detect(const std::string &s) {
  return DetectComparative(s, Lexicon::Default());
}

TEST(DetectTest, ModifiedErThan) {
  auto m = Detect(
      "serum TSH levels were slightly higher in the chloroquine group than in "
      "the placebo group");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->pattern, PatternKind::kErThan);
  EXPECT_EQ(m->direction, Direction::kSup);
  ASSERT_EQ(m->spans.size(), 2u);
  EXPECT_EQ(SpanText(*m, 0), "slightly higher");
  EXPECT_EQ(m->spans[0].kind, SpanKind::kComparativePhrase);
  EXPECT_EQ(SpanText(*m, 1), "than");
  EXPECT_EQ(m->spans[1].kind, SpanKind::kConnective);
  EXPECT_EQ(m->head, "higher");
}

TEST(DetectTest, NoDifferenceBetweenAnd) {
  auto m = Detect(
      "there is no difference between IFN treatment and supportive treatment");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->pattern, PatternKind::kNoDiffBetweenAnd);
  EXPECT_EQ(m->direction, Direction::kEq);
  ASSERT_EQ(m->spans.size(), 2u);
  EXPECT_EQ(SpanText(*m, 0), "no difference between");
  EXPECT_EQ(SpanText(*m, 1), "and");
}

TEST(DetectTest, NoSignificantDifferenceVariant) {
  auto m = Detect(
      "There was no statistically significant difference between the arms and "
      "the controls.");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->pattern, PatternKind::kNoDiffBetweenAnd);
  EXPECT_EQ(SpanText(*m, 0), "no statistically significant difference between");
}

TEST(DetectTest, ComparedToConnective) {
  auto m = Detect(
      "Levels of viral antigen staining in lung sections of GS-5734-treated "
      "animals were significantly lower as compared to vehicle-treated "
      "animals.");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->direction, Direction::kInf);
  EXPECT_EQ(m->head, "lower");
  ASSERT_EQ(m->spans.size(), 1u);
  EXPECT_EQ(SpanText(*m, 0), "significantly lower as compared to");
}

TEST(DetectTest, MoreLessSimilar) {
  auto more = Detect("Pain was much more frequent with A than with B.");
  ASSERT_TRUE(more.has_value());
  EXPECT_EQ(more->pattern, PatternKind::kMoreThan);
  EXPECT_EQ(more->direction, Direction::kSup);
  EXPECT_EQ(SpanText(*more, 0), "much more");

  auto less = Detect("Nausea was less common in arm A than in arm B.");
  ASSERT_TRUE(less.has_value());
  EXPECT_EQ(less->pattern, PatternKind::kLessThan);
  EXPECT_EQ(less->direction, Direction::kInf);

  auto similar = Detect("A was similar to B.");
  ASSERT_TRUE(similar.has_value());
  EXPECT_EQ(similar->pattern, PatternKind::kSimilarTo);
  EXPECT_EQ(similar->direction, Direction::kEq);
  ASSERT_EQ(similar->spans.size(), 2u);
  EXPECT_EQ(SpanText(*similar, 0), "similar");
  EXPECT_EQ(SpanText(*similar, 1), "to");
}

TEST(DetectTest, NoneForPlainSentences) {
  EXPECT_FALSE(Detect("the weather was nice").has_value());
  EXPECT_FALSE(Detect("").has_value());
  EXPECT_FALSE(Detect("Levels were higher.").has_value()) << "no connective";
  EXPECT_FALSE(Detect("Than higher.").has_value()) << "connective first";
}

TEST(DetectTest, LeftmostMatchOnly) {
  auto m = Detect("A was lower than B and C was higher than D.");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->head, "lower");
}

TEST(DetectTest, ModifierWindowIsThreeWords) {
  auto m = Detect("X was much far significantly slightly higher than Y.");
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(SpanText(*m, 0), "far significantly slightly higher");
}

TEST(DetectTest, TrapSetProducesNoMatches) {
  std::vector<std::string> traps = testing::TrapSentences();
  ASSERT_GE(traps.size(), 20u);
  for (const std::string &s : traps) {
    EXPECT_FALSE(Detect(s).has_value()) << s;
  }
}

TEST(DetectTest, SpanInvariants) {
  SyntheticCorpus corpus =
      GenerateSyntheticCorpus(3, 300, SyntheticConfig{});
  for (const GoldEvidence &g : corpus.gold) {
    auto m = Detect(g.sentence);
    ASSERT_TRUE(m.has_value()) << g.sentence;
    size_t prev_end = 0;
    for (const MaskSpan &s : m->spans) {
      EXPECT_LE(prev_end, s.begin);
      EXPECT_LT(s.begin, s.end);
      EXPECT_LE(s.end, m->sentence.size());
      prev_end = s.end;
    }
    const bool directional = m->pattern == PatternKind::kMoreThan ||
                             m->pattern == PatternKind::kLessThan ||
                             m->pattern == PatternKind::kErThan;
    EXPECT_EQ(directional, m->direction != Direction::kEq);
    // Determinism.
    auto again = Detect(g.sentence);
    EXPECT_EQ(again->spans, m->spans);
  }
}

ChunkedAbstract Chunked(const std::string &background,
                        const std::string &results) {
  return {"doc", background, results};
}

TEST(MineDocumentTest, ComparedToSentence) {
  MineResult r = MineDocument(
      Chunked("Mice were infected.",
              "Levels of viral antigen staining in lung sections of "
              "GS-5734-treated animals were significantly lower as compared "
              "to vehicle-treated animals."),
      Lexicon::Default(), LabelVocabulary::Default(), SentenceSegmenter());
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].label.direction, Direction::kInf);
  EXPECT_EQ(r.records[0].label.name, "[LOWER]");
  EXPECT_EQ(r.records[0].background, "Mice were infected.");
  EXPECT_EQ(r.records[0].doc_id, "doc");
}

TEST(MineDocumentTest, TwoSentencesShareBackground) {
  MineResult r = MineDocument(
      Chunked("B text.", "A was lower than B. C was similar to D. Done."),
      Lexicon::Default(), LabelVocabulary::Default(), SentenceSegmenter());
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0].background, "B text.");
  EXPECT_EQ(r.records[1].background, "B text.");
  EXPECT_NE(r.records[0].id, r.records[1].id);
}

TEST(MineDocumentTest, EmptyResultPart) {
  MineResult r = MineDocument(Chunked("A was lower than B.", ""),
                              Lexicon::Default(), LabelVocabulary::Default(),
                              SentenceSegmenter());
  EXPECT_TRUE(r.records.empty());
}

TEST(MineDocumentTest, EmptyBackgroundAllowed) {
  MineResult r = MineDocument(Chunked("", "A was lower than B."),
                              Lexicon::Default(), LabelVocabulary::Default(),
                              SentenceSegmenter());
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].background, "");
}

TEST(MineCorpusTest, ReconstructionAndWorkerIndependence) {
  SyntheticCorpus corpus = GenerateSyntheticCorpus(5, 400, SyntheticConfig{});
  const SentenceSegmenter segmenter;
  MineResult one = MineCorpus(corpus.documents, Lexicon::Default(),
                              LabelVocabulary::Default(), segmenter,
                              SectionMap::Default(), 1);
  MineResult four = MineCorpus(corpus.documents, Lexicon::Default(),
                               LabelVocabulary::Default(), segmenter,
                               SectionMap::Default(), 4);
  ASSERT_EQ(one.records.size(), four.records.size());
  for (size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(RecordToJson(one.records[i]), RecordToJson(four.records[i]));
    const ImplicitEvidenceRecord &r = one.records[i];
    EXPECT_EQ(RestorePlaceholders(r.e_dis, r.e_ent, r.spans), r.e_ent);
    EXPECT_EQ(CountPlaceholders(r.e_dis), r.spans.size());
  }
}

TEST(MineCorpusTest, RecordJsonRoundTrip) {
  SyntheticCorpus corpus = GenerateSyntheticCorpus(5, 50, SyntheticConfig{});
  MineResult mined = MineCorpus(corpus.documents, Lexicon::Default(),
                                LabelVocabulary::Default(),
                                SentenceSegmenter(), SectionMap::Default(), 1);
  for (const ImplicitEvidenceRecord &r : mined.records) {
    const std::string line = RecordToJson(r);
    EXPECT_EQ(RecordToJson(RecordFromJson(line, LabelVocabulary::Default())),
              line);
  }
}

TEST(StatsTest, Empty) {
  DirectionStats s = CorpusStats({});
  EXPECT_EQ(s.total, 0u);
  EXPECT_EQ(s.counts, (std::array<size_t, 3>{0, 0, 0}));
  EXPECT_FALSE(s.fractions.has_value());
}

TEST(StatsTest, FixtureFractions) {
  const LabelVocabulary &vocab = LabelVocabulary::Default();
  std::vector<ImplicitEvidenceRecord> records(10);
  for (int i = 0; i < 10; ++i) {
    records[i].label = vocab.Get(i < 5 ? "[HIGHER]"
                                 : i < 8 ? "[NODIFF]"
                                         : "[LOWER]");
  }
  DirectionStats s = CorpusStats(records);
  EXPECT_EQ(s.total, 10u);
  EXPECT_EQ(s.counts, (std::array<size_t, 3>{5, 3, 2}));
  ASSERT_TRUE(s.fractions.has_value());
  EXPECT_DOUBLE_EQ((*s.fractions)[0], 0.5);
  EXPECT_DOUBLE_EQ((*s.fractions)[1], 0.3);
  EXPECT_DOUBLE_EQ((*s.fractions)[2], 0.2);
  EXPECT_NEAR((*s.fractions)[0] + (*s.fractions)[1] + (*s.fractions)[2], 1.0,
              1e-12);
}

}  // namespace
}  // namespace ctrp
