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

// Comparative-sentence detection and per-document mining.
//
// Recognized patterns (case-insensitive, word-level):
//
//   [mod]* more  ... than            MORE_THAN        [MORE]
//   [mod]* less  ... than            LESS_THAN        [LESS]
//   [mod]* <lexicon head> ... than   ER_THAN          lexicon label
//   similar|comparable ... to        SIMILAR_TO       [SIMILAR]
//   no [statistically] [significant] difference(s) between ... and
//                                    NODIFF_BETWEEN_AND [NODIFF]
//
// Directional heads also accept "compared to/with" and "as compared
// to/with" as the connective; "-ior" heads ("superior", "inferior") accept
// "to". When a compared-to connective directly follows the head phrase the
// two form a single span. A directional head is abandoned if another
// directional head occurs before its connective.

#ifndef CTRP_MINER_H_
#define CTRP_MINER_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctrp/corpus.h"
#include "ctrp/evidence.h"
#include "ctrp/lexicon.h"

namespace ctrp {

// Leftmost comparative match in a single sentence, or nullopt.
std::optional<ComparativeMatch> DetectComparative(std::string_view sentence,
                                                  const Lexicon &lexicon);

// Adapter for ChunkAbstract.
SentencePredicate MakeEvidenceDetector(const Lexicon &lexicon);

struct Rejection {
  std::string doc_id;
  std::string sentence;
  std::string reason;  // reason code, see disentangle.h
};

struct MineResult {
  std::vector<ImplicitEvidenceRecord> records;
  std::vector<Rejection> rejections;
};

// Runs detection over the result/conclusion sentences of `chunked` and
// disentangles every match. Records share chunked.background_method.
MineResult MineDocument(const ChunkedAbstract &chunked, const Lexicon &lexicon,
                        const LabelVocabulary &vocab,
                        const SentenceSegmenter &segmenter);

// Chunks and mines every document. Documents are split across `workers`
// threads (0 means the hardware concurrency); results keep input order
// whatever the worker count.
MineResult MineCorpus(std::span<const Document> documents,
                      const Lexicon &lexicon, const LabelVocabulary &vocab,
                      const SentenceSegmenter &segmenter,
                      const SectionMap &sections, int workers = 0);

struct DirectionStats {
  std::array<size_t, 3> counts{};  // indexed by Direction
  size_t total = 0;
  // Undefined (nullopt) when total is zero.
  std::optional<std::array<double, 3>> fractions;
};

DirectionStats CorpusStats(std::span<const ImplicitEvidenceRecord> records);

}  // namespace ctrp

#endif  // CTRP_MINER_H_
