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

#include "ctrp/mesh.h"

#include <algorithm>
#include <climits>

#include "ctrp/baselines.h"
#include "ctrp/error.h"
#include "ctrp/text.h"

namespace ctrp {
namespace {

std::vector<std::string_view> Segments(std::string_view tree) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t dot = tree.find('.', start);
    out.push_back(tree.substr(start, dot == std::string_view::npos
                                         ? std::string_view::npos
                                         : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

// Lower-cased words of `text` with their byte spans.
struct Word {
  ByteSpan span;
  std::string lower;
};

std::vector<Word> Words(std::string_view text) {
  std::vector<Word> out;
  for (const ByteSpan &s : FindWords(text)) {
    out.push_back({s, ToLower(text.substr(s.begin, s.size()))});
  }
  return out;
}

}  // namespace

bool IsWellFormedTreeNumber(std::string_view tree) {
  if (tree.empty()) return false;
  for (std::string_view seg : Segments(tree)) {
    if (seg.empty()) return false;
    for (char c : seg) {
      if (!IsAsciiAlpha(c) && !IsAsciiDigit(c)) return false;
    }
  }
  return true;
}

int TreeDist(std::string_view a, std::string_view b, int bridge) {
  if (!IsWellFormedTreeNumber(a) || !IsWellFormedTreeNumber(b)) {
    throw ValidationError("malformed tree number \"" +
                          std::string(IsWellFormedTreeNumber(a) ? b : a) +
                          "\"");
  }
  const std::vector<std::string_view> sa = Segments(a);
  const std::vector<std::string_view> sb = Segments(b);
  size_t lcp = 0;
  while (lcp < sa.size() && lcp < sb.size() && sa[lcp] == sb[lcp]) ++lcp;
  const int d = static_cast<int>((sa.size() - lcp) + (sb.size() - lcp));
  return lcp == 0 ? d + bridge : d;
}

void MeshIndex::Add(std::string_view term, std::string_view tree_number) {
  const std::string key = NormalizeWhitespace(ToLower(term));
  if (key.empty()) throw ValidationError("empty MeSH term");
  if (!IsWellFormedTreeNumber(tree_number)) {
    throw ValidationError("malformed tree number \"" +
                          std::string(tree_number) + "\" for term " + key);
  }
  std::vector<std::string> &trees = trees_[key];
  if (std::find(trees.begin(), trees.end(), tree_number) == trees.end()) {
    trees.emplace_back(tree_number);
  }
  std::vector<Word> words = Words(key);
  if (words.empty()) throw ValidationError("MeSH term without words: " + key);
  std::vector<std::string> &bucket = by_first_word_[words[0].lower];
  if (std::find(bucket.begin(), bucket.end(), key) == bucket.end()) {
    bucket.push_back(key);
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const std::string &x, const std::string &y) {
                       return x.size() > y.size();
                     });
  }
}

MeshIndex MeshIndex::FromTsv(std::istream &in) {
  MeshIndex index;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view row = Trim(line);
    if (row.empty() || row.front() == '#') continue;
    std::vector<std::string> cols = Split(row, '\t');
    if (cols.size() != 2) {
      throw ValidationError("MeSH index line " + std::to_string(line_number) +
                            ": expected term<TAB>tree_number");
    }
    index.Add(Trim(cols[0]), Trim(cols[1]));
  }
  return index;
}

std::vector<std::string> MeshIndex::Match(std::string_view text) const {
  std::vector<std::string> out;
  const std::vector<Word> words = Words(text);
  size_t i = 0;
  while (i < words.size()) {
    auto bucket = by_first_word_.find(words[i].lower);
    size_t matched_words = 0;
    if (bucket != by_first_word_.end()) {
      for (const std::string &term : bucket->second) {
        const std::vector<Word> term_words = Words(term);
        if (i + term_words.size() > words.size()) continue;
        bool ok = true;
        for (size_t k = 0; k < term_words.size() && ok; ++k) {
          ok = words[i + k].lower == term_words[k].lower;
          // Term words must be separated by whitespace only.
          if (ok && k > 0) {
            std::string_view gap = text.substr(
                words[i + k - 1].span.end,
                words[i + k].span.begin - words[i + k - 1].span.end);
            ok = !gap.empty() &&
                 std::all_of(gap.begin(), gap.end(), IsAsciiSpace);
          }
        }
        if (ok) {
          out.push_back(term);
          matched_words = term_words.size();
          break;
        }
      }
    }
    i += matched_words > 0 ? matched_words : 1;
  }
  return out;
}

const std::vector<std::string> &MeshIndex::TreeNumbers(
    const std::string &term) const {
  static const std::vector<std::string> kEmpty;
  auto it = trees_.find(term);
  return it == trees_.end() ? kEmpty : it->second;
}

bool MeshProfile::any_match() const {
  return std::any_of(trees.begin(), trees.end(),
                     [](const auto &t) { return !t.empty(); });
}

MeshProfile Profile(const FinetuneInstance &inst, const MeshIndex &index) {
  MeshProfile profile;
  const std::string *texts[3] = {&inst.intervention, &inst.comparator,
                                 &inst.outcome};
  for (int e = 0; e < 3; ++e) {
    for (const std::string &term : index.Match(*texts[e])) {
      for (const std::string &tree : index.TreeNumbers(term)) {
        std::vector<std::string> &dst = profile.trees[e];
        if (std::find(dst.begin(), dst.end(), tree) == dst.end()) {
          dst.push_back(tree);
        }
      }
    }
  }
  return profile;
}

int MeshDistance(const MeshProfile &a, const MeshProfile &b,
                 const MeshConfig &config) {
  int total = 0;
  for (int e = 0; e < 3; ++e) {
    if (a.trees[e].empty() || b.trees[e].empty()) {
      total += config.no_match_penalty;
      continue;
    }
    int best = INT_MAX;
    for (const std::string &x : a.trees[e]) {
      for (const std::string &y : b.trees[e]) {
        best = std::min(best, TreeDist(x, y, config.bridge));
      }
    }
    total += best;
  }
  return total;
}

MeshNearestNeighbor::MeshNearestNeighbor(
    std::span<const FinetuneInstance> train, const MeshIndex &index,
    MeshConfig config)
    : index_(index), config_(config) {
  if (train.empty()) throw ValidationError("empty MeSH training set");
  for (const FinetuneInstance &inst : train) {
    profiles_.push_back(Profile(inst, index));
    labels_.push_back(inst.result);
  }
  majority_ = MajorityLabel(labels_);
}

MeshPrediction MeshNearestNeighbor::Predict(
    const FinetuneInstance &test) const {
  MeshPrediction out;
  const MeshProfile profile = Profile(test, index_);
  if (!profile.any_match()) {
    out.label = majority_;
    out.fallback = true;
    return out;
  }
  int best = INT_MAX;
  std::array<long, 3> votes{};
  for (size_t i = 0; i < profiles_.size(); ++i) {
    const int d = MeshDistance(profile, profiles_[i], config_);
    if (d < best) {
      best = d;
      votes = {};
    }
    if (d == best) ++votes[static_cast<int>(labels_[i])];
  }
  out.distance = best;
  out.neighbors = static_cast<int>(votes[0] + votes[1] + votes[2]);
  std::vector<TrialResult> pool;
  for (int k = 0; k < 3; ++k) {
    pool.insert(pool.end(), votes[k], static_cast<TrialResult>(k));
  }
  out.label = MajorityLabel(pool);
  return out;
}

}  // namespace ctrp
