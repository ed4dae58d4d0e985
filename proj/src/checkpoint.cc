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

#include "ctrp/checkpoint.h"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "ctrp/error.h"
#include "json.hpp"

namespace ctrp {
namespace {

using json = nlohmann::json;

constexpr char kMagic[8] = {'C', 'T', 'R', 'P', 'C', 'K', 'P', 'T'};

void PutU32(uint32_t v, std::ostream &out) {
  unsigned char b[4] = {static_cast<unsigned char>(v),
                        static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char *>(b), 4);
}

uint32_t GetU32(std::istream &in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char *>(b), 4)) {
    throw ValidationError("truncated checkpoint");
  }
  return static_cast<uint32_t>(b[0]) | static_cast<uint32_t>(b[1]) << 8 |
         static_cast<uint32_t>(b[2]) << 16 | static_cast<uint32_t>(b[3]) << 24;
}

uint32_t FloatBits(float f) {
  uint32_t u;
  std::memcpy(&u, &f, 4);
  return u;
}

json ConfigJson(const ModelConfig &c) {
  return {{"layers", c.layers},         {"hidden", c.hidden},
          {"heads", c.heads},           {"ff_dim", c.ff_dim},
          {"max_len", c.max_len},       {"vocab_size", c.vocab_size},
          {"num_labels", c.num_labels}, {"dropout", c.dropout}};
}

ModelConfig ConfigFrom(const json &j) {
  ModelConfig c;
  c.layers = j.value("layers", c.layers);
  c.hidden = j.value("hidden", c.hidden);
  c.heads = j.value("heads", c.heads);
  c.ff_dim = j.value("ff_dim", c.ff_dim);
  c.max_len = j.value("max_len", c.max_len);
  c.vocab_size = j.value("vocab_size", c.vocab_size);
  c.num_labels = j.value("num_labels", c.num_labels);
  c.dropout = j.value("dropout", c.dropout);
  return c;
}

}  // namespace

std::string ModelConfigToJson(const ModelConfig &config) {
  return ConfigJson(config).dump();
}

ModelConfig ModelConfigFromJson(const std::string &text) {
  try {
    return ConfigFrom(json::parse(text));
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed model config: ") + e.what());
  }
}

void WriteCheckpoint(const Model &model,
                     const std::map<std::string, std::string> &metadata,
                     std::ostream &out) {
  json header;
  header["config"] = ConfigJson(model.config());
  header["metadata"] = metadata;
  json tensors = json::array();
  for (const TensorInfo &t : model.layout().tensors()) {
    tensors.push_back(
        {{"name", t.name}, {"shape", {t.rows, t.cols}}, {"offset", t.offset}});
  }
  header["tensors"] = tensors;
  const std::string text = header.dump();

  out.write(kMagic, sizeof(kMagic));
  PutU32(kCheckpointVersion, out);
  PutU32(static_cast<uint32_t>(text.size()), out);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  std::string data(model.params().size() * 4, '\0');
  for (size_t i = 0; i < model.params().size(); ++i) {
    const uint32_t u = FloatBits(model.params()[i]);
    for (int k = 0; k < 4; ++k) {
      data[4 * i + k] = static_cast<char>((u >> (8 * k)) & 0xff);
    }
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

Checkpoint ReadCheckpoint(std::istream &in) {
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) ||
      !std::equal(magic, magic + sizeof(magic), kMagic)) {
    throw ValidationError("not a checkpoint (bad magic)");
  }
  const uint32_t version = GetU32(in);
  if (version != kCheckpointVersion) {
    throw ValidationError("unsupported checkpoint version " +
                          std::to_string(version));
  }
  const uint32_t header_len = GetU32(in);
  std::string text(header_len, '\0');
  if (!in.read(text.data(), header_len)) {
    throw ValidationError("truncated checkpoint header");
  }
  json header;
  ModelConfig config;
  std::map<std::string, std::string> metadata;
  try {
    header = json::parse(text);
    config = ConfigFrom(header.at("config"));
    metadata = header.value("metadata",
                            std::map<std::string, std::string>());
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed checkpoint header: ") +
                          e.what());
  }
  ParamLayout layout(config);
  try {
    const json &tensors = header.at("tensors");
    if (tensors.size() != layout.tensors().size()) {
      throw ValidationError("checkpoint tensor table has " +
                            std::to_string(tensors.size()) +
                            " entries, configuration expects " +
                            std::to_string(layout.tensors().size()));
    }
    for (size_t i = 0; i < tensors.size(); ++i) {
      const TensorInfo &want = layout.tensors()[i];
      const json &got = tensors[i];
      if (got.at("name").get<std::string>() != want.name ||
          got.at("shape").at(0).get<int>() != want.rows ||
          got.at("shape").at(1).get<int>() != want.cols ||
          got.at("offset").get<size_t>() != want.offset) {
        throw ValidationError("checkpoint tensor " + want.name +
                              " disagrees with the configuration");
      }
    }
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed tensor table: ") + e.what());
  }
  std::string data(layout.size() * 4, '\0');
  if (!in.read(data.data(), static_cast<std::streamsize>(data.size()))) {
    throw ValidationError("truncated checkpoint data");
  }
  ParamVector params(layout.size());
  for (size_t i = 0; i < params.size(); ++i) {
    uint32_t u = 0;
    for (int k = 0; k < 4; ++k) {
      u |= static_cast<uint32_t>(static_cast<unsigned char>(data[4 * i + k]))
           << (8 * k);
    }
    std::memcpy(&params[i], &u, 4);
  }
  return {Model(config, std::move(params)), std::move(metadata)};
}

void SaveCheckpoint(const Model &model,
                    const std::map<std::string, std::string> &metadata,
                    const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write checkpoint " + path);
  WriteCheckpoint(model, metadata, out);
  if (!out) throw InputError("failed writing checkpoint " + path);
}

Checkpoint LoadCheckpoint(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open checkpoint " + path);
  return ReadCheckpoint(in);
}

}  // namespace ctrp
