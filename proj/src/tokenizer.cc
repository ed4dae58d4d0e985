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

#include "ctrp/tokenizer.h"

#include <algorithm>
#include <map>

#include "ctrp/error.h"
#include "ctrp/text.h"

namespace ctrp {

const std::vector<std::string> &Tokenizer::SpecialTokens() {
  static const std::vector<std::string> kSpecials = {
      "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]", "[STAT]"};
  return kSpecials;
}

std::vector<std::string> Tokenizer::Pieces(std::string_view text) {
  const std::vector<std::string> &specials = SpecialTokens();
  std::vector<std::string> pieces;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (IsAsciiSpace(c)) {
      ++i;
      continue;
    }
    if (c == '[') {
      size_t close = text.find(']', i);
      if (close != std::string_view::npos) {
        std::string_view candidate = text.substr(i, close + 1 - i);
        if (std::find(specials.begin(), specials.end(), candidate) !=
            specials.end()) {
          pieces.emplace_back(candidate);
          i = close + 1;
          continue;
        }
      }
    }
    if (!IsWordByte(c)) {
      pieces.emplace_back(1, c);
      ++i;
      continue;
    }
    size_t begin = i;
    while (i < n) {
      if (IsWordByte(text[i])) {
        ++i;
      } else if ((text[i] == '-' || text[i] == '\'') && i + 1 < n &&
                 IsWordByte(text[i + 1])) {
        i += 2;
      } else if (text[i] == '.' && i > begin && IsAsciiDigit(text[i - 1]) &&
                 i + 1 < n && IsAsciiDigit(text[i + 1])) {
        i += 2;
      } else {
        break;
      }
    }
    pieces.push_back(ToLower(text.substr(begin, i - begin)));
  }
  return pieces;
}

Tokenizer::Tokenizer(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  for (size_t i = 0; i < tokens_.size(); ++i) {
    if (!ids_.emplace(tokens_[i], static_cast<int>(i)).second) {
      throw ValidationError("duplicate token \"" + tokens_[i] + "\"");
    }
  }
}

Tokenizer Tokenizer::Train(std::span<const std::string> texts, int max_vocab,
                           int min_freq) {
  if (max_vocab < 100) throw ValidationError("max_vocab must be >= 100");
  std::map<std::string, long> counts;
  const std::vector<std::string> &specials = SpecialTokens();
  for (const std::string &text : texts) {
    for (std::string &piece : Pieces(text)) {
      if (std::find(specials.begin(), specials.end(), piece) !=
          specials.end()) {
        continue;
      }
      ++counts[std::move(piece)];
    }
  }
  if (counts.empty()) throw ValidationError("tokenizer corpus is empty");

  std::vector<std::pair<std::string, long>> ranked(counts.begin(),
                                                   counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) {
                     return a.second > b.second;
                   });
  std::vector<std::string> tokens = specials;
  for (const auto &[piece, count] : ranked) {
    if (static_cast<int>(tokens.size()) >= max_vocab) break;
    if (count < min_freq) break;
    tokens.push_back(piece);
  }
  return Tokenizer(std::move(tokens));
}

int Tokenizer::Id(std::string_view piece) const {
  auto it = ids_.find(std::string(piece));
  return it == ids_.end() ? kUnk : it->second;
}

std::vector<int> Tokenizer::Encode(std::string_view text) const {
  std::vector<int> ids;
  for (const std::string &piece : Pieces(text)) ids.push_back(Id(piece));
  return ids;
}

std::string Tokenizer::Decode(std::span<const int> ids) const {
  std::string out;
  for (int id : ids) {
    if (id == kPad || id == kCls || id == kSep) continue;
    if (!out.empty()) out += ' ';
    out += Token(id);
  }
  return out;
}

void Tokenizer::Save(std::ostream &out) const {
  for (const std::string &t : tokens_) out << t << '\n';
}

Tokenizer Tokenizer::Load(std::istream &in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) tokens.push_back(line);
  const std::vector<std::string> &specials = SpecialTokens();
  if (tokens.size() < specials.size() ||
      !std::equal(specials.begin(), specials.end(), tokens.begin())) {
    throw ValidationError("vocabulary file does not start with the reserved "
                          "special tokens");
  }
  return Tokenizer(std::move(tokens));
}

}  // namespace ctrp
