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

#include "ctrp/evidence.h"

#include "ctrp/error.h"
#include "json.hpp"

namespace ctrp {

using json = nlohmann::json;

std::string_view PatternName(PatternKind kind) {
  switch (kind) {
    case PatternKind::kMoreThan:
      return "MORE_THAN";
    case PatternKind::kLessThan:
      return "LESS_THAN";
    case PatternKind::kErThan:
      return "ER_THAN";
    case PatternKind::kSimilarTo:
      return "SIMILAR_TO";
    case PatternKind::kNoDiffBetweenAnd:
      return "NODIFF_BETWEEN_AND";
  }
  return "?";
}

PatternKind ParsePattern(std::string_view name) {
  for (PatternKind k :
       {PatternKind::kMoreThan, PatternKind::kLessThan, PatternKind::kErThan,
        PatternKind::kSimilarTo, PatternKind::kNoDiffBetweenAnd}) {
    if (PatternName(k) == name) return k;
  }
  throw ValidationError("unknown pattern kind \"" + std::string(name) + "\"");
}

std::string_view SpanKindName(SpanKind kind) {
  return kind == SpanKind::kComparativePhrase ? "comparative_phrase"
                                              : "connective";
}

SpanKind ParseSpanKind(std::string_view name) {
  if (name == "comparative_phrase") return SpanKind::kComparativePhrase;
  if (name == "connective") return SpanKind::kConnective;
  throw ValidationError("unknown span kind \"" + std::string(name) + "\"");
}

std::string RecordToJson(const ImplicitEvidenceRecord &record) {
  json spans = json::array();
  for (const MaskSpan &s : record.spans) {
    spans.push_back({s.begin, s.end, SpanKindName(s.kind)});
  }
  json out;
  out["id"] = record.id;
  out["doc_id"] = record.doc_id;
  out["background"] = record.background;
  out["e_ent"] = record.e_ent;
  out["e_dis"] = record.e_dis;
  out["r_text"] = record.r_text;
  out["label"] = record.label.name;
  out["direction"] = DirectionName(record.label.direction);
  out["pattern"] = PatternName(record.pattern);
  out["spans"] = std::move(spans);
  return out.dump();
}

ImplicitEvidenceRecord RecordFromJson(std::string_view line,
                                      const LabelVocabulary &vocab) {
  try {
    json in = json::parse(line);
    ImplicitEvidenceRecord record;
    record.id = in.at("id").get<std::string>();
    record.doc_id = in.at("doc_id").get<std::string>();
    record.background = in.at("background").get<std::string>();
    record.e_ent = in.at("e_ent").get<std::string>();
    record.e_dis = in.at("e_dis").get<std::string>();
    record.r_text = in.at("r_text").get<std::string>();
    record.label = vocab.Get(in.at("label").get<std::string>());
    if (in.contains("direction") &&
        ParseDirection(in["direction"].get<std::string>()) !=
            record.label.direction) {
      throw ValidationError("direction disagrees with label " +
                            record.label.name);
    }
    if (in.contains("pattern")) {
      record.pattern = ParsePattern(in["pattern"].get<std::string>());
    }
    for (const json &s : in.at("spans")) {
      record.spans.push_back({s.at(0).get<size_t>(), s.at(1).get<size_t>(),
                              ParseSpanKind(s.at(2).get<std::string>())});
    }
    return record;
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed evidence record: ") +
                          e.what());
  }
}

size_t CountPlaceholders(std::string_view text) {
  size_t count = 0;
  for (size_t pos = text.find(kMaskToken); pos != std::string_view::npos;
       pos = text.find(kMaskToken, pos + kMaskToken.size())) {
    ++count;
  }
  return count;
}

std::string RestorePlaceholders(std::string_view e_dis, std::string_view e_ent,
                                const std::vector<MaskSpan> &spans) {
  std::string out;
  size_t cursor = 0;
  for (const MaskSpan &span : spans) {
    size_t pos = e_dis.find(kMaskToken, cursor);
    if (pos == std::string_view::npos || span.end > e_ent.size()) break;
    out.append(e_dis.substr(cursor, pos - cursor));
    out.append(e_ent.substr(span.begin, span.end - span.begin));
    cursor = pos + kMaskToken.size();
  }
  out.append(e_dis.substr(cursor));
  return out;
}

}  // namespace ctrp
