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


#include "ctrp/corpus.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ctrp/error.h"
#include "ctrp/lexicon.h"
#include "ctrp/miner.h"
#include "ctrp/text.h"
#include "oracles.h"

namespace ctrp {
namespace {

TEST(ParseTest, MinimalRecord) {
  Document doc = ParseDocument(
      R"({"id":"d1","title":"t","sections":[{"name":null,"text":"A. B."}]})");
  EXPECT_EQ(doc.id, "d1");
  EXPECT_EQ(doc.title, "t");
  ASSERT_EQ(doc.sections.size(), 1u);
  EXPECT_FALSE(doc.sections[0].name.has_value());
  EXPECT_EQ(doc.sections[0].text, "A. B.");
}

TEST(ParseTest, EmptySectionListAllowed) {
  Document doc = ParseDocument(R"({"id":"d","title":"","sections":[]})");
  EXPECT_TRUE(doc.sections.empty());
}

TEST(ParseTest, RejectsMalformedRecords) {
  for (const char *line :
       {"not json", R"({"title":"t","sections":[]})",
        R"({"id":"","title":"t","sections":[]})",
        R"({"id":"d","title":"t","sections":[{"name":null,"text":"   "}]})",
        R"({"id":"d","title":"t","sections":{}})"}) {
    EXPECT_THROW(ParseDocument(line), Error) << line;
  }
}

TEST(ParseTest, SkipsBadLinesWithLineNumbers) {
  std::istringstream in(
      R"({"id":"a","title":"t","sections":[{"name":null,"text":"X."}]})"
      "\n"
      "not json\n"
      R"({"id":"b","title":"t","sections":[{"name":"RESULTS","text":"Y."}]})"
      "\n\n"
      R"({"id":"c","title":"t","sections":[]})"
      "\n");
  ParseSummary summary;
  std::vector<Document> docs = ParseCorpus(in, &summary);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].id, "a");
  EXPECT_EQ(docs[1].id, "b");
  EXPECT_EQ(docs[2].id, "c");
  EXPECT_EQ(summary.documents, 3u);
  EXPECT_EQ(summary.skipped, 1u);
  ASSERT_EQ(summary.issues.size(), 1u);
  EXPECT_EQ(summary.issues[0].line, 2u);
}

TEST(ParseTest, DuplicateIdIsSkipped) {
  std::istringstream in(R"({"id":"a","title":"t","sections":[]})"
                        "\n"
                        R"({"id":"a","title":"u","sections":[]})"
                        "\n");
  ParseSummary summary;
  EXPECT_EQ(ParseCorpus(in, &summary).size(), 1u);
  EXPECT_EQ(summary.skipped, 1u);
}

TEST(ParseTest, DocumentJsonRoundTrip) {
  Document doc;
  doc.id = "x";
  doc.title = "T";
  doc.sections = {{std::string("METHODS"), "M."}, {std::nullopt, "R."}};
  Document back = ParseDocument(DocumentToJson(doc));
  EXPECT_EQ(back.id, doc.id);
  ASSERT_EQ(back.sections.size(), 2u);
  EXPECT_EQ(back.sections[0].name, doc.sections[0].name);
  EXPECT_FALSE(back.sections[1].name.has_value());
}

struct SegmentationCase {
  std::string input;
  std::vector<std::string> sentences;
};

std::vector<SegmentationCase> LoadSegmentationFixture() {
  std::ifstream in(std::string(CTRP_TEST_DATA_DIR) + "/segmentation.txt");
  std::vector<SegmentationCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0 || line == "#") continue;
    if (line.rfind("> ", 0) == 0) {
      cases.push_back({line.substr(2), {}});
    } else if (!line.empty() && !cases.empty()) {
      cases.back().sentences.push_back(line);
    }
  }
  return cases;
}

TEST(SegmentTest, HandSegmentedFixture) {
  std::vector<SegmentationCase> cases = LoadSegmentationFixture();
  ASSERT_GE(cases.size(), 10u);
  SentenceSegmenter segmenter;
  for (const SegmentationCase &c : cases) {
    EXPECT_EQ(segmenter.Segment(c.input), c.sentences) << c.input;
  }
}

TEST(SegmentTest, EmptyInput) {
  EXPECT_TRUE(SentenceSegmenter().Segment("").empty());
  EXPECT_TRUE(SentenceSegmenter().Segment("  \n ").empty());
}

TEST(SegmentTest, CustomAbbreviations) {
  SentenceSegmenter plain(std::vector<std::string>{});
  EXPECT_EQ(plain.Segment("Smith et al. Reported it.").size(), 2u);
  std::istringstream in("# guard list\nal.\n");
  SentenceSegmenter guarded = SentenceSegmenter::FromStream(in);
  EXPECT_EQ(guarded.Segment("Smith et al. Reported it.").size(), 1u);
}

TEST(SegmentTest, RoundTripProperty) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> pieces = {
      "A",  "b",   "al.", "vs.", "0.05", ".",  "!", "?", " ",
      "  ", "\n", "Fig.", "X.", "e.g.", "p",   "C", "2.", "ok"};
  SentenceSegmenter segmenter;
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const int n = 1 + static_cast<int>(rng() % 25);
    for (int i = 0; i < n; ++i) {
      text += pieces[rng() % pieces.size()];
      if (rng() % 2) text += ' ';
    }
    std::vector<std::string> sentences = segmenter.Segment(text);
    EXPECT_EQ(NormalizeWhitespace(Join(sentences, " ")),
              NormalizeWhitespace(text))
        << text;
    for (const std::string &s : sentences) EXPECT_FALSE(s.empty());
  }
}

TEST(SectionMapTest, DefaultRouting) {
  SectionMap map = SectionMap::Default();
  EXPECT_EQ(map.Route("BACKGROUND"), SectionRole::kBackgroundMethod);
  EXPECT_EQ(map.Route("Methods"), SectionRole::kBackgroundMethod);
  EXPECT_EQ(map.Route("results"), SectionRole::kResultConclusion);
  EXPECT_EQ(map.Route("CONCLUSIONS"), SectionRole::kResultConclusion);
  EXPECT_EQ(map.Route("Main Outcome Measures"), SectionRole::kBackgroundMethod);
  EXPECT_EQ(map.Route("OUTCOMES"), SectionRole::kResultConclusion);
  EXPECT_EQ(map.Route("FUNDING"), SectionRole::kBackgroundMethod);
}

TEST(SectionMapTest, TsvRoundTrip) {
  SectionMap map = SectionMap::Default();
  std::istringstream in(map.ToTsv());
  EXPECT_EQ(SectionMap::FromTsv(in).ToTsv(), map.ToTsv());
}

TEST(SectionMapTest, ShippedFileEqualsBuiltIn) {
  std::ifstream in(std::string(CTRP_CONFIG_DIR) + "/sections.tsv");
  ASSERT_TRUE(in.good());
  EXPECT_EQ(SectionMap::FromTsv(in).ToTsv(), SectionMap::Default().ToTsv());
}

class ChunkTest : public ::testing::Test {
 protected:
  ChunkedAbstract Chunk(const Document &doc) {
    return ChunkAbstract(doc, segmenter_, sections_,
                         MakeEvidenceDetector(Lexicon::Default()));
  }
  Document Unnamed(const std::string &text) {
    Document doc;
    doc.id = "d";
    doc.sections = {{std::nullopt, text}};
    return doc;
  }

  SentenceSegmenter segmenter_;
  SectionMap sections_ = SectionMap::Default();
};

TEST_F(ChunkTest, NamedSections) {
  Document doc;
  doc.id = "d";
  doc.sections = {{std::string("BACKGROUND"), "X."},
                  {std::string("RESULTS"), "Y."}};
  ChunkedAbstract c = Chunk(doc);
  EXPECT_EQ(c.doc_id, "d");
  EXPECT_EQ(c.background_method, "X.");
  EXPECT_EQ(c.result_conclusion, "Y.");
}

TEST_F(ChunkTest, UnnamedSplitsAtFirstComparative) {
  ChunkedAbstract c = Chunk(Unnamed("Setup done. TSH was higher in A than in B."));
  EXPECT_EQ(c.background_method, "Setup done.");
  EXPECT_EQ(c.result_conclusion, "TSH was higher in A than in B.");
}

TEST_F(ChunkTest, UnnamedWithoutComparative) {
  ChunkedAbstract c = Chunk(Unnamed("Setup done. Nothing else happened."));
  EXPECT_EQ(c.background_method, "Setup done. Nothing else happened.");
  EXPECT_EQ(c.result_conclusion, "");
}

TEST_F(ChunkTest, PartitionAndOrderProperty) {
  const std::vector<std::string> pool = {
      "Patients were enrolled.", "Weight was lower in A than in B.",
      "Outcomes were similar to baseline.", "The other arm stopped.",
      "Follow-up lasted a year.", "There was no difference between X and Y."};
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    Document doc;
    doc.id = "d";
    std::vector<std::string> all;
    const int n_sections = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < n_sections; ++s) {
      std::string text;
      const int n = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < n; ++i) {
        const std::string &sent = pool[rng() % pool.size()];
        text += (text.empty() ? "" : " ") + sent;
        all.push_back(sent);
      }
      std::optional<std::string> name;
      switch (rng() % 3) {
        case 0:
          name = "METHODS";
          break;
        case 1:
          name = "RESULTS";
          break;
        default:
          break;
      }
      doc.sections.push_back({name, text});
    }
    ChunkedAbstract c = Chunk(doc);
    std::vector<std::string> got = segmenter_.Segment(c.background_method);
    for (const std::string &s : segmenter_.Segment(c.result_conclusion)) {
      got.push_back(s);
    }
    auto is_subsequence = [&](const std::vector<std::string> &part) {
      size_t k = 0;
      for (const std::string &s : all) {
        if (k < part.size() && part[k] == s) ++k;
      }
      return k == part.size();
    };
    EXPECT_TRUE(is_subsequence(segmenter_.Segment(c.background_method)));
    EXPECT_TRUE(is_subsequence(segmenter_.Segment(c.result_conclusion)));
    std::vector<std::string> sorted_all = all, sorted_got = got;
    std::sort(sorted_all.begin(), sorted_all.end());
    std::sort(sorted_got.begin(), sorted_got.end());
    EXPECT_EQ(sorted_got, sorted_all);
    // Determinism.
    ChunkedAbstract again = Chunk(doc);
    EXPECT_EQ(again.background_method, c.background_method);
    EXPECT_EQ(again.result_conclusion, c.result_conclusion);
  }
}

}  // namespace
}  // namespace ctrp
