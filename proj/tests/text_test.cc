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


#include "ctrp/text.h"

#include <random>
#include <string>

#include <gtest/gtest.h>

namespace ctrp {
namespace {

TEST(TextTest, NormalizeWhitespace) {
  EXPECT_EQ(NormalizeWhitespace("  a \t b\n\nc  "), "a b c");
  EXPECT_EQ(NormalizeWhitespace(""), "");
  EXPECT_EQ(NormalizeWhitespace(" \n "), "");
}

TEST(TextTest, NormalizeIsIdempotent) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "ab .\t\n";
  for (int trial = 0; trial < 200; ++trial) {
    std::string s;
    for (int i = 0; i < 30; ++i) s += alphabet[rng() % alphabet.size()];
    const std::string once = NormalizeWhitespace(s);
    EXPECT_EQ(NormalizeWhitespace(once), once);
    EXPECT_EQ(once.find("  "), std::string::npos);
  }
}

TEST(TextTest, FindWordsJoinsInnerHyphensAndApostrophes) {
  const std::string text = "GS-5734-treated patients' levels - x";
  std::vector<std::string> words;
  for (const ByteSpan &w : FindWords(text)) {
    words.push_back(text.substr(w.begin, w.size()));
  }
  EXPECT_EQ(words, (std::vector<std::string>{"GS-5734-treated", "patients",
                                             "levels", "x"}));
}

TEST(TextTest, SplitJoinRoundTrip) {
  EXPECT_EQ(Split("a,b,,c", ','),
            (std::vector<std::string>{"a", "b", "", "c"}));
  EXPECT_EQ(Join(Split("a,b,,c", ','), ","), "a,b,,c");
  EXPECT_EQ(ToLower("AbC-1"), "abc-1");
  EXPECT_TRUE(StartsWith("[MASK] x", "[MASK]"));
  EXPECT_TRUE(EndsWith("x.", "."));
  EXPECT_EQ(Trim("  x y "), "x y");
}

}  // namespace
}  // namespace ctrp
