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

#include "ctrp/dataset.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "ctrp/adversarial.h"
#include "ctrp/disentangle.h"
#include "ctrp/error.h"
#include "ctrp/text.h"
#include "json.hpp"

namespace ctrp {

using json = nlohmann::json;

std::string EncodedToJson(const EncodedInstance &inst) {
  json out;
  out["id"] = inst.id;
  out["token_ids"] = inst.token_ids;
  out["segment_ids"] = inst.segment_ids;
  out["label_id"] = inst.label_id;
  out["adversarial"] = inst.adversarial;
  return out.dump();
}

EncodedInstance EncodedFromJson(std::string_view line) {
  EncodedInstance inst;
  try {
    json in = json::parse(line);
    inst.id = in.value("id", "");
    inst.token_ids = in.at("token_ids").get<std::vector<int>>();
    inst.segment_ids = in.at("segment_ids").get<std::vector<int>>();
    inst.label_id = in.at("label_id").get<int>();
    inst.adversarial = in.value("adversarial", false);
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed encoded instance: ") +
                          e.what());
  }
  if (inst.token_ids.size() != inst.segment_ids.size()) {
    throw ValidationError("encoded instance " + inst.id +
                          ": token and segment lengths differ");
  }
  return inst;
}

std::vector<TrialElement> ParseLayout(std::string_view spec) {
  std::vector<TrialElement> layout;
  for (const std::string &part : Split(spec, ',')) {
    std::string_view letter = Trim(part);
    TrialElement element;
    if (letter == "P") {
      element = TrialElement::kPopulation;
    } else if (letter == "I") {
      element = TrialElement::kIntervention;
    } else if (letter == "C") {
      element = TrialElement::kComparator;
    } else if (letter == "O") {
      element = TrialElement::kOutcome;
    } else {
      throw ValidationError("unknown layout element \"" + std::string(letter) +
                            "\" (expected P, I, C or O)");
    }
    if (std::find(layout.begin(), layout.end(), element) != layout.end()) {
      throw ValidationError("layout element " + std::string(letter) +
                            " repeated");
    }
    layout.push_back(element);
  }
  return layout;
}

std::string LayoutToString(const std::vector<TrialElement> &layout) {
  std::string out;
  for (TrialElement e : layout) {
    if (!out.empty()) out += ',';
    switch (e) {
      case TrialElement::kPopulation:
        out += 'P';
        break;
      case TrialElement::kIntervention:
        out += 'I';
        break;
      case TrialElement::kComparator:
        out += 'C';
        break;
      case TrialElement::kOutcome:
        out += 'O';
        break;
    }
  }
  return out;
}

namespace {

EncodedInstance Assemble(std::vector<int> background, std::vector<int> evidence,
                         const EncodeOptions &options) {
  if (options.drop_background) background.clear();
  if (static_cast<int>(background.size()) > options.max_background) {
    background.erase(background.begin(),
                     background.end() - options.max_background);
  }
  if (static_cast<int>(evidence.size()) > options.max_evidence) {
    evidence.resize(options.max_evidence);
  }
  EncodedInstance out;
  out.token_ids.reserve(background.size() + evidence.size() + 3);
  out.token_ids.push_back(Tokenizer::kCls);
  out.token_ids.insert(out.token_ids.end(), background.begin(),
                       background.end());
  out.token_ids.push_back(Tokenizer::kSep);
  out.segment_ids.assign(out.token_ids.size(), 0);
  out.token_ids.insert(out.token_ids.end(), evidence.begin(), evidence.end());
  out.token_ids.push_back(Tokenizer::kSep);
  out.segment_ids.resize(out.token_ids.size(), 1);
  return out;
}

}  // namespace

EncodedInstance Encode(const Tokenizer &tokenizer, const PretrainInstance &inst,
                       const LabelVocabulary &vocab,
                       const EncodeOptions &options) {
  EncodedInstance out = Assemble(tokenizer.Encode(inst.background),
                                 tokenizer.Encode(inst.evidence), options);
  out.id = inst.id;
  out.label_id = vocab.IdOf(inst.label.name);
  out.adversarial = inst.adversarial;
  return out;
}

EncodedInstance Encode(const Tokenizer &tokenizer, const FinetuneInstance &inst,
                       const EncodeOptions &options) {
  std::vector<int> evidence;
  bool first = true;
  for (TrialElement element : options.layout) {
    const std::string *text = nullptr;
    switch (element) {
      case TrialElement::kPopulation:
        if (inst.population) text = &*inst.population;
        break;
      case TrialElement::kIntervention:
        text = &inst.intervention;
        break;
      case TrialElement::kComparator:
        text = &inst.comparator;
        break;
      case TrialElement::kOutcome:
        text = &inst.outcome;
        break;
    }
    if (text == nullptr) continue;
    if (!first) evidence.push_back(Tokenizer::kSep);
    first = false;
    std::vector<int> ids = tokenizer.Encode(*text);
    evidence.insert(evidence.end(), ids.begin(), ids.end());
  }
  EncodedInstance out =
      Assemble(tokenizer.Encode(inst.background), std::move(evidence), options);
  out.id = inst.id;
  out.label_id = static_cast<int>(inst.result);
  out.adversarial = inst.adversarial;
  return out;
}

PretrainDataset BuildPretrainDataset(
    std::span<const ImplicitEvidenceRecord> records,
    const LabelVocabulary &vocab, const PretrainBuildOptions &options) {
  if (options.adversarial_ratio < 0.0 || options.adversarial_ratio > 1.0) {
    throw ValidationError("adversarial ratio must lie in [0, 1]");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const size_t n_adversarial = static_cast<size_t>(
      std::llround(options.adversarial_ratio * records.size()));
  std::vector<bool> reverse(records.size(), false);
  for (size_t i = 0; i < n_adversarial; ++i) reverse[order[i]] = true;

  auto scrub = [&](std::string text) {
    return options.scrub_statistics ? MaskFunctionalTokens(text) : text;
  };

  PretrainDataset out;
  out.seed = options.seed;
  for (size_t i = 0; i < records.size(); ++i) {
    const ImplicitEvidenceRecord &r = records[i];
    out.instances.push_back(
        {r.id, r.background, scrub(r.e_dis), r.label, false, r.id});
    if (reverse[i]) {
      AdversarialEvidence adv = MakeAdversarialPretrain(r, vocab);
      out.instances.push_back({r.id + "/adv", r.background,
                               scrub(std::move(adv.e_rev)), adv.label, true,
                               adv.source_id});
    }
  }
  std::shuffle(out.instances.begin(), out.instances.end(), rng);
  out.histogram.assign(vocab.size(), 0);
  for (const PretrainInstance &inst : out.instances) {
    ++out.histogram[vocab.IdOf(inst.label.name)];
  }
  return out;
}

std::pair<std::vector<ImplicitEvidenceRecord>,
          std::vector<ImplicitEvidenceRecord>>
SplitByDocument(std::span<const ImplicitEvidenceRecord> records,
                double holdout_fraction, uint64_t seed) {
  std::vector<std::string> docs;
  std::unordered_set<std::string> seen;
  for (const ImplicitEvidenceRecord &r : records) {
    if (seen.insert(r.doc_id).second) docs.push_back(r.doc_id);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(docs.begin(), docs.end(), rng);
  const size_t n_held =
      static_cast<size_t>(std::llround(holdout_fraction * docs.size()));
  std::unordered_set<std::string> held(docs.begin(), docs.begin() + n_held);
  std::pair<std::vector<ImplicitEvidenceRecord>,
            std::vector<ImplicitEvidenceRecord>>
      out;
  for (const ImplicitEvidenceRecord &r : records) {
    (held.count(r.doc_id) ? out.second : out.first).push_back(r);
  }
  return out;
}

std::vector<FinetuneInstance> WithAdversarialCopies(
    std::span<const FinetuneInstance> instances) {
  std::vector<FinetuneInstance> out(instances.begin(), instances.end());
  for (const FinetuneInstance &inst : instances) {
    out.push_back(MakeAdversarialFinetune(inst));
  }
  return out;
}

}  // namespace ctrp
