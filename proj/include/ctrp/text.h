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

// Byte-level string helpers shared by the ingest, mining and tokenizer code.
// All text is UTF-8; only ASCII bytes are ever case-mapped.

#ifndef CTRP_TEXT_H_
#define CTRP_TEXT_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ctrp {

// Half-open byte range [begin, end) into some string.
struct ByteSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const ByteSpan &other) const = default;
};

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }

// Letters, digits and any non-ASCII byte count as word characters.
inline bool IsWordByte(char c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Collapses whitespace runs to one space and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

std::string_view Trim(std::string_view text);
std::string ToLower(std::string_view text);

// Word tokens: maximal runs of word bytes, joined across single inner
// hyphens or apostrophes ("GS-5734-treated", "patients'").
std::vector<ByteSpan> FindWords(std::string_view text);

std::vector<std::string> Split(std::string_view text, char delimiter);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

bool StartsWith(std::string_view text, std::string_view prefix);
bool EndsWith(std::string_view text, std::string_view suffix);

// Reads a whole stream; used for small config files.
std::string ReadAll(std::istream &in);

}  // namespace ctrp

#endif  // CTRP_TEXT_H_
