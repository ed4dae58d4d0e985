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

#include "ctrp/adversarial.h"

#include <algorithm>

#include "ctrp/error.h"
#include "ctrp/text.h"

namespace ctrp {
namespace {

constexpr std::string_view kAdversarialSuffix = "/adv";

struct SplitEvidence {
  std::vector<std::string> segments;
  std::string terminal;
};

SplitEvidence SplitOnPlaceholders(std::string_view e_dis) {
  if (CountPlaceholders(e_dis) == 0) {
    throw ValidationError("evidence has no [MASK] placeholder to pivot on: \"" +
                          std::string(e_dis) + "\"");
  }
  SplitEvidence out;
  std::string_view body = Trim(e_dis);
  if (!body.empty() &&
      (body.back() == '.' || body.back() == '!' || body.back() == '?')) {
    out.terminal = std::string(1, body.back());
    body.remove_suffix(1);
  }
  size_t cursor = 0;
  while (true) {
    size_t pos = body.find(kMaskToken, cursor);
    std::string_view piece =
        body.substr(cursor, pos == std::string_view::npos ? std::string_view::npos
                                                          : pos - cursor);
    out.segments.push_back(NormalizeWhitespace(piece));
    if (pos == std::string_view::npos) break;
    cursor = pos + kMaskToken.size();
  }
  return out;
}

bool LeadsWithAcronym(const std::string &segment) {
  std::vector<ByteSpan> words = FindWords(segment);
  if (words.empty()) return false;
  int capitals = 0;
  for (size_t i = words[0].begin; i < words[0].end; ++i) {
    if (IsAsciiUpper(segment[i])) ++capitals;
  }
  return capitals >= 2;
}

void SetFirstLetterCase(std::string *segment, bool upper) {
  if (LeadsWithAcronym(*segment)) return;
  for (char &c : *segment) {
    if (!IsAsciiAlpha(c)) continue;
    if (upper && IsAsciiLower(c)) c = static_cast<char>(c - 'a' + 'A');
    if (!upper && IsAsciiUpper(c)) c = static_cast<char>(c - 'A' + 'a');
    return;
  }
}

std::string Assemble(const std::vector<std::string> &segments,
                     const std::string &terminal) {
  std::string out;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) {
      if (!out.empty()) out += ' ';
      out += kMaskToken;
    }
    if (!segments[i].empty()) {
      if (!out.empty()) out += ' ';
      out += segments[i];
    }
  }
  return out + terminal;
}

}  // namespace

std::vector<std::string> EvidenceSegments(std::string_view e_dis) {
  return SplitOnPlaceholders(e_dis).segments;
}

std::string ReverseEvidence(std::string_view e_dis) {
  SplitEvidence split = SplitOnPlaceholders(e_dis);
  std::vector<std::string> &segments = split.segments;
  SetFirstLetterCase(&segments.front(), /*upper=*/false);
  SetFirstLetterCase(&segments.back(), /*upper=*/true);
  std::reverse(segments.begin(), segments.end());
  return Assemble(segments, split.terminal);
}

std::string NormalizeEvidenceCase(std::string_view e_dis) {
  SplitEvidence split = SplitOnPlaceholders(e_dis);
  std::vector<std::string> &segments = split.segments;
  SetFirstLetterCase(&segments.back(), /*upper=*/false);
  SetFirstLetterCase(&segments.front(), /*upper=*/true);
  return Assemble(segments, split.terminal);
}

AdversarialEvidence MakeAdversarialPretrain(
    const ImplicitEvidenceRecord &record, const LabelVocabulary &vocab) {
  return {ReverseEvidence(record.e_dis), Rev(record.label, vocab), record.id};
}

FinetuneInstance MakeAdversarialFinetune(const FinetuneInstance &instance) {
  FinetuneInstance out = instance;
  std::swap(out.intervention, out.comparator);
  out.result = ReverseResult(instance.result);
  out.adversarial = !instance.adversarial;
  if (EndsWith(out.id, kAdversarialSuffix)) {
    out.id.resize(out.id.size() - kAdversarialSuffix.size());
  } else {
    out.id += kAdversarialSuffix;
  }
  return out;
}

}  // namespace ctrp
