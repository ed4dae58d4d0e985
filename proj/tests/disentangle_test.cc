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


#include "ctrp/disentangle.h"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "ctrp/lexicon.h"
#include "ctrp/miner.h"

namespace ctrp {
namespace {

Disentangled DisentangleSentence(const std::string &sentence) {
  auto m = DetectComparative(sentence, Lexicon::Default());
  EXPECT_TRUE(m.has_value()) << sentence;
  return Disentangle(*m, Lexicon::Default(), LabelVocabulary::Default());
}

TEST(DisentangleTest, ModifiedHigherThan) {
  Disentangled d = DisentangleSentence(
      "Serum TSH levels were slightly higher in the chloroquine group than in "
      "the placebo group.");
  EXPECT_EQ(d.e_dis,
            "Serum TSH levels were [MASK] in the chloroquine group [MASK] in "
            "the placebo group.");
  EXPECT_EQ(d.r_text, "slightly higher ... than");
  EXPECT_EQ(d.label.name, "[HIGHER]");
  EXPECT_EQ(d.label.direction, Direction::kSup);
}

TEST(DisentangleTest, ComparedToIsOneMask) {
  Disentangled d = DisentangleSentence(
      "Levels of viral antigen staining in lung sections of GS-5734-treated "
      "animals were significantly lower as compared to vehicle-treated "
      "animals.");
  EXPECT_EQ(d.e_dis,
            "Levels of viral antigen staining in lung sections of "
            "GS-5734-treated animals were [MASK] vehicle-treated animals.");
  EXPECT_EQ(d.label.name, "[LOWER]");
}

TEST(DisentangleTest, SimilarTo) {
  Disentangled d = DisentangleSentence("A was similar to B.");
  // Masking both spans by hand: "A was " + [MASK] + " " + [MASK] + " B."
  EXPECT_EQ(d.e_dis, "A was [MASK] [MASK] B.");
  EXPECT_EQ(d.r_text, "similar ... to");
  EXPECT_EQ(d.label.name, "[SIMILAR]");
}

TEST(DisentangleTest, NoDifference) {
  Disentangled d = DisentangleSentence("There was no difference between A and B.");
  EXPECT_EQ(d.e_dis, "There was [MASK] A [MASK] B.");
  EXPECT_EQ(d.label.name, "[NODIFF]");
}

TEST(DisentangleTest, FreeDegreeHeads) {
  EXPECT_EQ(DisentangleSentence("A had more events than B.").label.name, "[MORE]");
  EXPECT_EQ(DisentangleSentence("A had less pain than B.").label.name, "[LESS]");
  EXPECT_EQ(DisentangleSentence("A had fewer events than B.").label.name, "[LESS]");
}

TEST(DisentangleTest, UnlistedHeadFallsBackOrIsRejected) {
  ComparativeMatch m;
  m.sentence = "A was bluer than B.";
  m.pattern = PatternKind::kErThan;
  m.direction = Direction::kSup;
  m.head = "bluer";
  m.spans = {{6, 11, SpanKind::kComparativePhrase},
             {12, 16, SpanKind::kConnective}};
  Disentangled d =
      Disentangle(m, Lexicon::Default(), LabelVocabulary::Default());
  EXPECT_EQ(d.label.name, "[MORE]");
  EXPECT_EQ(d.e_dis, "A was [MASK] [MASK] B.");

  m.direction = Direction::kEq;
  try {
    Disentangle(m, Lexicon::Default(), LabelVocabulary::Default());
    FAIL() << "expected rejection";
  } catch (const RecordRejected &e) {
    EXPECT_EQ(e.reason(), kRejectUnknownHead);
  }
}

TEST(DisentangleTest, InvalidSpansRejected) {
  ComparativeMatch m;
  m.sentence = "A was lower than B.";
  m.direction = Direction::kInf;
  m.head = "lower";
  m.spans = {{12, 16, SpanKind::kConnective},
             {6, 11, SpanKind::kComparativePhrase}};
  EXPECT_THROW(Disentangle(m, Lexicon::Default(), LabelVocabulary::Default()),
               RecordRejected);
  m.spans = {{6, 40, SpanKind::kComparativePhrase}};
  EXPECT_THROW(Disentangle(m, Lexicon::Default(), LabelVocabulary::Default()),
               RecordRejected);
}

TEST(MaskFunctionalTokensTest, Examples) {
  EXPECT_EQ(MaskFunctionalTokens("higher (p < 0.001) than"),
            "higher ([STAT]) than");
  EXPECT_EQ(MaskFunctionalTokens("no statistics here"), "no statistics here");
  EXPECT_EQ(MaskFunctionalTokens("95% CI 0.8\xE2\x80\x93" "1.3"), "[STAT]");
  EXPECT_EQ(MaskFunctionalTokens("95% CI 1.2-3.4"), "[STAT]");
  EXPECT_EQ(MaskFunctionalTokens("lower (P=0.001)"), "lower ([STAT])");
  EXPECT_EQ(MaskFunctionalTokens("with a p-value of 0.03."),
            "with a [STAT].");
}

TEST(MaskFunctionalTokensTest, Idempotent) {
  std::mt19937_64 rng(23);
  const std::vector<std::string> pieces = {
      "p < 0.05", "P=0.001", "95% CI 1.2-3.4", "p-value of 0.03", "higher",
      "(",        ")",       "than",           "[STAT]",          " ",
      "p",        "0.5",     "CI",             "95%",             ";"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (int i = 0; i < 8; ++i) {
      text += pieces[rng() % pieces.size()];
      text += ' ';
    }
    const std::string once = MaskFunctionalTokens(text);
    EXPECT_EQ(MaskFunctionalTokens(once), once) << text;
  }
}

}  // namespace
}  // namespace ctrp
