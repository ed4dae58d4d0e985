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

// Model checkpoints.
//
// Layout:
//   8 bytes   magic "CTRPCKPT"
//   u32 LE    format version
//   u32 LE    header length in bytes
//   header    JSON: {"config": {...}, "metadata": {...},
//                    "tensors": [{"name", "shape": [rows, cols], "offset"}]}
//   data      float32 LE, row-major, tensors at their element offsets

#ifndef CTRP_CHECKPOINT_H_
#define CTRP_CHECKPOINT_H_

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "ctrp/model.h"

namespace ctrp {

inline constexpr uint32_t kCheckpointVersion = 1;

std::string ModelConfigToJson(const ModelConfig &config);
// Missing keys keep their defaults. Throws ValidationError on bad JSON.
ModelConfig ModelConfigFromJson(const std::string &text);

struct Checkpoint {
  Model model;
  std::map<std::string, std::string> metadata;
};

void WriteCheckpoint(const Model &model,
                     const std::map<std::string, std::string> &metadata,
                     std::ostream &out);
// Throws ValidationError on a bad magic, unknown version, or a tensor table
// that disagrees with the configuration.
Checkpoint ReadCheckpoint(std::istream &in);

// File wrappers; InputError when the file cannot be opened.
void SaveCheckpoint(const Model &model,
                    const std::map<std::string, std::string> &metadata,
                    const std::string &path);
Checkpoint LoadCheckpoint(const std::string &path);

}  // namespace ctrp

#endif  // CTRP_CHECKPOINT_H_
