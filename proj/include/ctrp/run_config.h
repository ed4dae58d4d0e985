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

// Run configuration shared by the command-line stages.
//
// Config files use a small TOML subset: "[section]" headers, "key = value"
// lines, '#' comments, double-quoted strings, bare numbers and true/false.
// Every key belongs to a section, e.g.
//
//   [pretrain]
//   epochs = 20
//   learning_rate = 1e-3
//
// Unknown sections or keys are errors. Each command writes the resolved
// configuration next to its outputs.

#ifndef CTRP_RUN_CONFIG_H_
#define CTRP_RUN_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "ctrp/baselines.h"
#include "ctrp/bow.h"
#include "ctrp/dataset.h"
#include "ctrp/mesh.h"
#include "ctrp/model.h"
#include "ctrp/synthetic.h"
#include "ctrp/trainer.h"

namespace ctrp {

struct PathsConfig {
  // Empty means the built-in default.
  std::string labels;
  std::string lexicon;
  std::string sections;
  std::string abbreviations;
};

struct BuildConfig {
  double adversarial_ratio = 1.0;
  double holdout = 0.1;
  int vocab_size = 8000;
  int min_freq = 1;
  std::string layout = "I,O,C";
  std::string drop;  // comma-separated subset of B,I,C,O
  uint64_t seed = 13;
  bool scrub_statistics = true;
};

struct FinetuneExtras {
  std::string mode = "full";
  bool freeze_label_head = false;
};

struct EvalConfig {
  int permutations = 10000;
  uint64_t seed = 1;
};

struct RunConfig {
  PathsConfig paths;
  SyntheticConfig synth;
  double swap_rate = 0.0;  // trial queries listing the control first
  int workers = 0;         // 0: available hardware threads
  BuildConfig build;
  ModelConfig model;
  TrainConfig pretrain;
  TrainConfig finetune;
  FinetuneExtras finetune_extras;
  LogisticConfig logistic;
  MeshConfig mesh;
  EvalConfig eval;

  RunConfig();
};

// Applies the settings in `text` on top of `config`. `origin` names the
// source in error messages. Throws ValidationError.
void ApplyConfigText(std::string_view text, const std::string &origin,
                     RunConfig *config);
// Reads and applies a config file. Throws InputError if unreadable.
void ApplyConfigFile(const std::string &path, RunConfig *config);

// Every key with its current value, in a form ApplyConfigText accepts.
std::string ConfigToToml(const RunConfig &config);

}  // namespace ctrp

#endif  // CTRP_RUN_CONFIG_H_
