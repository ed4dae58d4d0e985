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

#ifndef CTRP_TOKENIZER_H_
#define CTRP_TOKENIZER_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctrp {

// Lower-cased word-level vocabulary. Ids 0-5 are reserved for the special
// tokens below; regular tokens follow in descending frequency, ties broken
// lexicographically.
class Tokenizer {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;
  static constexpr int kCls = 2;
  static constexpr int kSep = 3;
  static constexpr int kMask = 4;
  static constexpr int kStat = 5;
  static constexpr int kNumSpecial = 6;

  static const std::vector<std::string> &SpecialTokens();

  // Splits text into lower-cased pieces: bracketed special tokens are kept
  // verbatim, words may contain inner hyphens, apostrophes and decimal
  // points, every other non-space byte is its own piece.
  static std::vector<std::string> Pieces(std::string_view text);

  // Throws ValidationError if max_vocab < 100 or the corpus has no tokens.
  static Tokenizer Train(std::span<const std::string> texts, int max_vocab,
                         int min_freq);

  std::vector<int> Encode(std::string_view text) const;
  // Space-joined pieces of the ids without [PAD], [CLS] and [SEP].
  std::string Decode(std::span<const int> ids) const;

  int size() const { return static_cast<int>(tokens_.size()); }
  int Id(std::string_view piece) const;  // kUnk when absent
  const std::string &Token(int id) const { return tokens_.at(id); }

  // One token per line, line number = id.
  void Save(std::ostream &out) const;
  static Tokenizer Load(std::istream &in);

 private:
  explicit Tokenizer(std::vector<std::string> tokens);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

}  // namespace ctrp

#endif  // CTRP_TOKENIZER_H_
