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

#include "ctrp/instances.h"

#include "ctrp/error.h"
#include "json.hpp"

namespace ctrp {

using json = nlohmann::json;

std::string_view ResultName(TrialResult r) {
  switch (r) {
    case TrialResult::kUp:
      return "up";
    case TrialResult::kNoDiff:
      return "nodiff";
    case TrialResult::kDown:
      return "down";
  }
  return "?";
}

TrialResult ParseResult(std::string_view name) {
  if (name == "up") return TrialResult::kUp;
  if (name == "nodiff") return TrialResult::kNoDiff;
  if (name == "down") return TrialResult::kDown;
  throw ValidationError("unknown result \"" + std::string(name) +
                        "\" (expected up|nodiff|down)");
}

std::string PretrainInstanceToJson(const PretrainInstance &inst) {
  json out;
  out["id"] = inst.id;
  out["background"] = inst.background;
  out["evidence"] = inst.evidence;
  out["label"] = inst.label.name;
  out["adversarial"] = inst.adversarial;
  out["source_id"] = inst.source_id;
  return out.dump();
}

PretrainInstance PretrainInstanceFromJson(std::string_view line,
                                          const LabelVocabulary &vocab) {
  try {
    json in = json::parse(line);
    PretrainInstance inst;
    inst.id = in.at("id").get<std::string>();
    inst.background = in.value("background", "");
    inst.evidence = in.at("evidence").get<std::string>();
    inst.label = vocab.Get(in.at("label").get<std::string>());
    inst.adversarial = in.value("adversarial", false);
    inst.source_id = in.value("source_id", "");
    return inst;
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed pre-training instance: ") +
                          e.what());
  }
}

std::string FinetuneInstanceToJson(const FinetuneInstance &inst) {
  json out;
  out["id"] = inst.id;
  out["background"] = inst.background;
  if (inst.population) out["population"] = *inst.population;
  out["intervention"] = inst.intervention;
  out["comparator"] = inst.comparator;
  out["outcome"] = inst.outcome;
  out["result"] = ResultName(inst.result);
  if (inst.adversarial) out["adversarial"] = true;
  return out.dump();
}

FinetuneInstance FinetuneInstanceFromJson(std::string_view line) {
  FinetuneInstance inst;
  try {
    json in = json::parse(line);
    inst.id = in.value("id", "");
    inst.background = in.value("background", "");
    if (in.contains("population") && !in["population"].is_null()) {
      inst.population = in["population"].get<std::string>();
    }
    inst.intervention = in.at("intervention").get<std::string>();
    inst.comparator = in.at("comparator").get<std::string>();
    inst.outcome = in.at("outcome").get<std::string>();
    inst.result = ParseResult(in.at("result").get<std::string>());
    inst.adversarial = in.value("adversarial", false);
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed fine-tuning instance: ") +
                          e.what());
  }
  if (inst.intervention.empty() || inst.comparator.empty() ||
      inst.outcome.empty()) {
    throw ValidationError("fine-tuning instance " + inst.id +
                          " has an empty intervention, comparator or outcome");
  }
  return inst;
}

}  // namespace ctrp
