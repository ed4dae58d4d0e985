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


#include "ctrp/dataset.h"

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ctrp/corpus.h"
#include "ctrp/error.h"
#include "ctrp/lexicon.h"
#include "ctrp/miner.h"
#include "ctrp/synthetic.h"

namespace ctrp {
namespace {

std::string Words(const std::string &stem, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += stem + std::to_string(i) + " ";
  return out;
}

Tokenizer TrainOn(const std::vector<std::string> &texts) {
  return Tokenizer::Train(texts, 2000, 1);
}

FinetuneInstance Trial() {
  FinetuneInstance t;
  t.id = "t";
  t.background = "bg";
  t.intervention = "drug";
  t.comparator = "placebo";
  t.outcome = "pain";
  t.result = TrialResult::kUp;
  return t;
}

void ExpectStructure(const EncodedInstance &e) {
  ASSERT_EQ(e.token_ids.size(), e.segment_ids.size());
  ASSERT_GE(e.token_ids.size(), 3u);
  EXPECT_EQ(e.token_ids.front(), Tokenizer::kCls);
  EXPECT_EQ(e.token_ids.back(), Tokenizer::kSep);
  size_t first_sep = 0;
  while (e.token_ids[first_sep] != Tokenizer::kSep) ++first_sep;
  for (size_t i = 0; i < e.segment_ids.size(); ++i) {
    EXPECT_EQ(e.segment_ids[i], i <= first_sep ? 0 : 1) << i;
  }
}

TEST(EncodeTest, FinetuneLayoutIOC) {
  Tokenizer tok = TrainOn({"bg drug placebo pain"});
  EncodedInstance e = Encode(tok, Trial());
  const int S = Tokenizer::kSep;
  EXPECT_EQ(e.token_ids,
            (std::vector<int>{Tokenizer::kCls, tok.Id("bg"), S, tok.Id("drug"),
                              S, tok.Id("pain"), S, tok.Id("placebo"), S}));
  EXPECT_EQ(e.label_id, static_cast<int>(TrialResult::kUp));
  ExpectStructure(e);
}

TEST(EncodeTest, LayoutAndDrop) {
  Tokenizer tok = TrainOn({"bg drug placebo pain"});
  EncodeOptions options;
  options.layout = ParseLayout("I,C");
  options.drop_background = true;
  EncodedInstance e = Encode(tok, Trial(), options);
  const int S = Tokenizer::kSep;
  EXPECT_EQ(e.token_ids,
            (std::vector<int>{Tokenizer::kCls, S, tok.Id("drug"), S,
                              tok.Id("placebo"), S}));
  ExpectStructure(e);
}

TEST(EncodeTest, PopulationOnlyWhenPresent) {
  Tokenizer tok = TrainOn({"bg drug placebo pain adults"});
  EncodeOptions options;
  options.layout = ParseLayout("P,I,O,C");
  FinetuneInstance t = Trial();
  EncodedInstance without = Encode(tok, t, options);
  t.population = "adults";
  EncodedInstance with = Encode(tok, t, options);
  EXPECT_EQ(with.token_ids.size(), without.token_ids.size() + 2);
  EXPECT_EQ(with.token_ids[3], tok.Id("adults"));
}

TEST(EncodeTest, EmptyBackground) {
  const LabelVocabulary &vocab = LabelVocabulary::Default();
  Tokenizer tok = TrainOn({"a was [MASK] b ."});
  PretrainInstance inst{"i", "", "A was [MASK] B.", vocab.Get("[HIGHER]"),
                        false, "i"};
  EncodedInstance e = Encode(tok, inst, vocab);
  EXPECT_EQ(e.token_ids[0], Tokenizer::kCls);
  EXPECT_EQ(e.token_ids[1], Tokenizer::kSep);
  EXPECT_EQ(e.token_ids[4], Tokenizer::kMask);
  EXPECT_EQ(e.label_id, vocab.IdOf("[HIGHER]"));
  ExpectStructure(e);
}

TEST(EncodeTest, TruncationKeepsBackgroundTailAndEvidenceHead) {
  const LabelVocabulary &vocab = LabelVocabulary::Default();
  const std::string background = Words("b", 300);
  const std::string evidence = Words("e", 150) + "[MASK]";
  Tokenizer tok = TrainOn({background, evidence});
  PretrainInstance inst{"i", background, evidence, vocab.Get("[LOWER]"),
                        false, "i"};
  EncodedInstance e = Encode(tok, inst, vocab);
  ExpectStructure(e);
  ASSERT_EQ(e.token_ids.size(), 1u + 256 + 1 + 128 + 1);
  EXPECT_EQ(e.token_ids[1], tok.Id("b44"));
  EXPECT_EQ(e.token_ids[256], tok.Id("b299"));
  EXPECT_EQ(e.token_ids[258], tok.Id("e0"));
  EXPECT_EQ(e.token_ids[385], tok.Id("e127"));
}

TEST(EncodeTest, LayoutParsing) {
  EXPECT_EQ(LayoutToString(ParseLayout("I, O ,C")), "I,O,C");
  EXPECT_THROW(ParseLayout("I,X"), Error);
  EXPECT_THROW(ParseLayout("I,I"), Error);
}

TEST(EncodeTest, JsonRoundTrip) {
  Tokenizer tok = TrainOn({"bg drug placebo pain"});
  EncodedInstance e = Encode(tok, Trial());
  e.adversarial = true;
  EncodedInstance back = EncodedFromJson(EncodedToJson(e));
  EXPECT_EQ(back.id, e.id);
  EXPECT_EQ(back.token_ids, e.token_ids);
  EXPECT_EQ(back.segment_ids, e.segment_ids);
  EXPECT_EQ(back.label_id, e.label_id);
  EXPECT_TRUE(back.adversarial);
  EXPECT_THROW(
      EncodedFromJson(R"({"token_ids":[1,2],"segment_ids":[0],"label_id":0})"),
      Error);
}

TEST(InstanceJsonTest, FinetuneRoundTripAndValidation) {
  FinetuneInstance t = Trial();
  t.population = "adults";
  EXPECT_EQ(FinetuneInstanceFromJson(FinetuneInstanceToJson(t)), t);
  EXPECT_THROW(
      FinetuneInstanceFromJson(
          R"({"background":"b","intervention":"","comparator":"c","outcome":"o","result":"up"})"),
      Error);
  EXPECT_THROW(
      FinetuneInstanceFromJson(
          R"({"background":"b","intervention":"i","comparator":"c","outcome":"o","result":"sideways"})"),
      Error);
}

class PretrainBuildTest : public ::testing::Test {
 protected:
  void SetUp() override {
    SyntheticCorpus corpus = GenerateSyntheticCorpus(9, 10, SyntheticConfig{});
    records_ = MineCorpus(corpus.documents, Lexicon::Default(),
                          LabelVocabulary::Default(), SentenceSegmenter(),
                          SectionMap::Default(), 1)
                   .records;
    ASSERT_EQ(records_.size(), 10u);
  }
  PretrainDataset Build(double ratio, uint64_t seed = 13) {
    PretrainBuildOptions options;
    options.adversarial_ratio = ratio;
    options.seed = seed;
    return BuildPretrainDataset(records_, LabelVocabulary::Default(), options);
  }

  std::vector<ImplicitEvidenceRecord> records_;
};

TEST_F(PretrainBuildTest, RatioOneDoubles) {
  PretrainDataset ds = Build(1.0);
  EXPECT_EQ(ds.instances.size(), 20u);
  EXPECT_EQ(std::accumulate(ds.histogram.begin(), ds.histogram.end(),
                            size_t{0}),
            ds.instances.size());
  int adversarial = 0;
  for (const PretrainInstance &i : ds.instances) {
    adversarial += i.adversarial;
    EXPECT_NE(i.evidence.find("[MASK]"), std::string::npos);
  }
  EXPECT_EQ(adversarial, 10);
}

TEST_F(PretrainBuildTest, RatioZeroKeepsOriginals) {
  PretrainDataset ds = Build(0.0);
  EXPECT_EQ(ds.instances.size(), 10u);
  for (const PretrainInstance &i : ds.instances) EXPECT_FALSE(i.adversarial);
}

TEST_F(PretrainBuildTest, PartialRatioAndReproducibility) {
  EXPECT_EQ(Build(0.5).instances.size(), 15u);
  EXPECT_THROW(Build(1.5), Error);
  PretrainDataset a = Build(1.0, 4), b = Build(1.0, 4);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (size_t i = 0; i < a.instances.size(); ++i) {
    EXPECT_EQ(PretrainInstanceToJson(a.instances[i]),
              PretrainInstanceToJson(b.instances[i]));
  }
  const LabelVocabulary &vocab = LabelVocabulary::Default();
  for (const PretrainInstance &i : a.instances) {
    EXPECT_EQ(PretrainInstanceToJson(
                  PretrainInstanceFromJson(PretrainInstanceToJson(i), vocab)),
              PretrainInstanceToJson(i));
  }
}

TEST(SplitTest, ByDocument) {
  const LabelVocabulary &vocab = LabelVocabulary::Default();
  std::vector<ImplicitEvidenceRecord> records;
  for (int d = 0; d < 20; ++d) {
    for (int k = 0; k < 2; ++k) {
      ImplicitEvidenceRecord r;
      r.doc_id = "d" + std::to_string(d);
      r.id = r.doc_id + ":" + std::to_string(k);
      r.label = vocab.Get("[HIGHER]");
      records.push_back(r);
    }
  }
  auto [train, held] = SplitByDocument(records, 0.25, 3);
  EXPECT_EQ(held.size(), 10u);
  EXPECT_EQ(train.size(), 30u);
  std::set<std::string> train_docs, held_docs;
  for (const auto &r : train) train_docs.insert(r.doc_id);
  for (const auto &r : held) held_docs.insert(r.doc_id);
  for (const std::string &d : held_docs) EXPECT_EQ(train_docs.count(d), 0u);
}

TEST(AdversarialCopiesTest, OriginalsThenCopies) {
  std::vector<FinetuneInstance> in = {Trial(), Trial()};
  in[1].id = "u";
  std::vector<FinetuneInstance> out = WithAdversarialCopies(in);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_FALSE(out[1].adversarial);
  EXPECT_TRUE(out[2].adversarial);
  EXPECT_EQ(out[2].intervention, "placebo");
}

}  // namespace
}  // namespace ctrp
