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

#include <algorithm>
#include <exception>
#include <thread>

#include "ctrp/disentangle.h"
#include "ctrp/text.h"

namespace ctrp {
namespace {

constexpr int kMaxModifiers = 3;

struct Word {
  ByteSpan span;
  std::string lower;
};

std::vector<Word> LowerWords(std::string_view sentence) {
  std::vector<Word> words;
  for (const ByteSpan &s : FindWords(sentence)) {
    words.push_back({s, ToLower(sentence.substr(s.begin, s.size()))});
  }
  return words;
}

bool IsDirectionalHead(const std::string &word, const Lexicon &lexicon) {
  return word == "more" || word == "less" || lexicon.Find(word) != nullptr;
}

bool OnlySpaces(std::string_view text) {
  for (char c : text) {
    if (!IsAsciiSpace(c)) return false;
  }
  return true;
}

struct Connective {
  size_t first = 0;  // word indices, inclusive
  size_t last = 0;
  bool compared = false;
};

std::optional<Connective> FindConnective(const std::vector<Word> &words,
                                         size_t head, bool allow_to,
                                         const Lexicon &lexicon) {
  for (size_t j = head + 1; j < words.size(); ++j) {
    const std::string &w = words[j].lower;
    if (IsDirectionalHead(w, lexicon)) return std::nullopt;
    if (w == "than") return Connective{j, j, false};
    if (w == "compared" && j + 1 < words.size() &&
        (words[j + 1].lower == "to" || words[j + 1].lower == "with")) {
      size_t first = (j - 1 > head && words[j - 1].lower == "as") ? j - 1 : j;
      return Connective{first, j + 1, true};
    }
    if (allow_to && w == "to") return Connective{j, j, false};
  }
  return std::nullopt;
}

std::optional<ComparativeMatch> MatchDirectional(std::string_view sentence,
                                                 const std::vector<Word> &words,
                                                 size_t i,
                                                 const Lexicon &lexicon) {
  const std::string &head = words[i].lower;
  PatternKind pattern;
  Direction direction;
  if (head == "more") {
    pattern = PatternKind::kMoreThan;
    direction = Direction::kSup;
  } else if (head == "less") {
    pattern = PatternKind::kLessThan;
    direction = Direction::kInf;
  } else if (const LexiconEntry *entry = lexicon.Find(head)) {
    pattern = PatternKind::kErThan;
    direction = entry->direction;
  } else {
    return std::nullopt;
  }
  const bool allow_to = EndsWith(head, "ior");
  std::optional<Connective> conn = FindConnective(words, i, allow_to, lexicon);
  if (!conn) return std::nullopt;

  size_t first = i;
  for (int k = 0; k < kMaxModifiers && first > 0; ++k) {
    const Word &prev = words[first - 1];
    if (!lexicon.IsModifier(prev.lower) ||
        !OnlySpaces(sentence.substr(prev.span.end,
                                    words[first].span.begin - prev.span.end))) {
      break;
    }
    --first;
  }

  ComparativeMatch match;
  match.sentence = std::string(sentence);
  match.pattern = pattern;
  match.direction = direction;
  match.head = head;
  const size_t phrase_begin = words[first].span.begin;
  const size_t phrase_end = words[i].span.end;
  const size_t conn_begin = words[conn->first].span.begin;
  const size_t conn_end = words[conn->last].span.end;
  if (conn->compared &&
      OnlySpaces(sentence.substr(phrase_end, conn_begin - phrase_end))) {
    match.spans.push_back(
        {phrase_begin, conn_end, SpanKind::kComparativePhrase});
  } else {
    match.spans.push_back(
        {phrase_begin, phrase_end, SpanKind::kComparativePhrase});
    match.spans.push_back({conn_begin, conn_end, SpanKind::kConnective});
  }
  return match;
}

std::optional<ComparativeMatch> MatchSimilar(std::string_view sentence,
                                             const std::vector<Word> &words,
                                             size_t i) {
  if (words[i].lower != "similar" && words[i].lower != "comparable") {
    return std::nullopt;
  }
  for (size_t j = i + 1; j < words.size(); ++j) {
    if (words[j].lower != "to") continue;
    ComparativeMatch match;
    match.sentence = std::string(sentence);
    match.pattern = PatternKind::kSimilarTo;
    match.direction = Direction::kEq;
    match.head = words[i].lower;
    match.spans = {
        {words[i].span.begin, words[i].span.end, SpanKind::kComparativePhrase},
        {words[j].span.begin, words[j].span.end, SpanKind::kConnective}};
    return match;
  }
  return std::nullopt;
}

// no [statistically|clinically] [significant] difference(s) between ... and
std::optional<ComparativeMatch> MatchNoDifference(
    std::string_view sentence, const std::vector<Word> &words, size_t i) {
  if (words[i].lower != "no") return std::nullopt;
  size_t j = i + 1;
  if (j < words.size() && (words[j].lower == "statistically" ||
                           words[j].lower == "clinically")) {
    ++j;
  }
  if (j < words.size() && words[j].lower == "significant") ++j;
  if (j >= words.size() ||
      (words[j].lower != "difference" && words[j].lower != "differences")) {
    return std::nullopt;
  }
  ++j;
  if (j >= words.size() || words[j].lower != "between") return std::nullopt;
  const size_t between = j;
  for (size_t k = between + 1; k < words.size(); ++k) {
    if (words[k].lower != "and") continue;
    ComparativeMatch match;
    match.sentence = std::string(sentence);
    match.pattern = PatternKind::kNoDiffBetweenAnd;
    match.direction = Direction::kEq;
    match.head = "difference";
    match.spans = {{words[i].span.begin, words[between].span.end,
                    SpanKind::kComparativePhrase},
                   {words[k].span.begin, words[k].span.end,
                    SpanKind::kConnective}};
    return match;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ComparativeMatch> DetectComparative(std::string_view sentence,
                                                  const Lexicon &lexicon) {
  const std::vector<Word> words = LowerWords(sentence);
  for (size_t i = 0; i < words.size(); ++i) {
    if (auto m = MatchDirectional(sentence, words, i, lexicon)) return m;
    if (auto m = MatchSimilar(sentence, words, i)) return m;
    if (auto m = MatchNoDifference(sentence, words, i)) return m;
  }
  return std::nullopt;
}

SentencePredicate MakeEvidenceDetector(const Lexicon &lexicon) {
  return [&lexicon](std::string_view sentence) {
    return DetectComparative(sentence, lexicon).has_value();
  };
}

MineResult MineDocument(const ChunkedAbstract &chunked, const Lexicon &lexicon,
                        const LabelVocabulary &vocab,
                        const SentenceSegmenter &segmenter) {
  MineResult result;
  for (const std::string &sentence :
       segmenter.Segment(chunked.result_conclusion)) {
    std::optional<ComparativeMatch> match =
        DetectComparative(sentence, lexicon);
    if (!match) continue;
    try {
      Disentangled d = Disentangle(*match, lexicon, vocab);
      if (d.label.direction != match->direction) {
        throw RecordRejected(kRejectDirectionMismatch,
                             d.label.name + " vs match direction " +
                                 std::string(DirectionName(match->direction)));
      }
      ImplicitEvidenceRecord record;
      record.id =
          chunked.doc_id + ":" + std::to_string(result.records.size());
      record.doc_id = chunked.doc_id;
      record.background = chunked.background_method;
      record.e_ent = sentence;
      record.e_dis = std::move(d.e_dis);
      record.r_text = std::move(d.r_text);
      record.label = std::move(d.label);
      record.pattern = match->pattern;
      record.spans = std::move(match->spans);
      result.records.push_back(std::move(record));
    } catch (const RecordRejected &e) {
      result.rejections.push_back(
          {chunked.doc_id, sentence, std::string(e.reason())});
    }
  }
  return result;
}

MineResult MineCorpus(std::span<const Document> documents,
                      const Lexicon &lexicon, const LabelVocabulary &vocab,
                      const SentenceSegmenter &segmenter,
                      const SectionMap &sections, int workers) {
  if (workers <= 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  workers = std::min<int>(workers, std::max<size_t>(documents.size(), 1));
  const SentencePredicate detector = MakeEvidenceDetector(lexicon);
  std::vector<MineResult> parts(documents.size());
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      for (size_t i = w; i < documents.size(); i += workers) {
        parts[i] = MineDocument(
            ChunkAbstract(documents[i], segmenter, sections, detector),
            lexicon, vocab, segmenter);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (std::thread &t : threads) t.join();
  }
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  MineResult out;
  for (MineResult &part : parts) {
    std::move(part.records.begin(), part.records.end(),
              std::back_inserter(out.records));
    std::move(part.rejections.begin(), part.rejections.end(),
              std::back_inserter(out.rejections));
  }
  return out;
}

DirectionStats CorpusStats(std::span<const ImplicitEvidenceRecord> records) {
  DirectionStats stats;
  for (const ImplicitEvidenceRecord &r : records) {
    ++stats.counts[static_cast<int>(r.label.direction)];
    ++stats.total;
  }
  if (stats.total > 0) {
    std::array<double, 3> fractions{};
    for (int d = 0; d < 3; ++d) {
      fractions[d] = static_cast<double>(stats.counts[d]) /
                     static_cast<double>(stats.total);
    }
    stats.fractions = fractions;
  }
  return stats;
}

}  // namespace ctrp
