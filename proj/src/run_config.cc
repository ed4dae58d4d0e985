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

#include "ctrp/run_config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <variant>
#include <vector>

#include "ctrp/error.h"
#include "ctrp/text.h"

namespace ctrp {
namespace {

using Target = std::variant<int *, double *, uint64_t *, bool *, std::string *>;

struct Binding {
  std::string section;
  std::string key;
  Target target;
};

void BindTrain(const std::string &section, TrainConfig *t,
               std::vector<Binding> *out) {
  out->push_back({section, "learning_rate", &t->learning_rate});
  out->push_back({section, "head_learning_rate", &t->head_learning_rate});
  out->push_back({section, "beta1", &t->beta1});
  out->push_back({section, "beta2", &t->beta2});
  out->push_back({section, "epsilon", &t->epsilon});
  out->push_back({section, "weight_decay", &t->weight_decay});
  out->push_back({section, "clip_norm", &t->clip_norm});
  out->push_back({section, "batch_size", &t->batch_size});
  out->push_back({section, "epochs", &t->epochs});
  out->push_back({section, "seed", &t->seed});
}

std::vector<Binding> Bindings(RunConfig *c) {
  std::vector<Binding> b = {
      {"paths", "labels", &c->paths.labels},
      {"paths", "lexicon", &c->paths.lexicon},
      {"paths", "sections", &c->paths.sections},
      {"paths", "abbreviations", &c->paths.abbreviations},
      {"synth", "world_seed", &c->synth.world_seed},
      {"synth", "drug_classes", &c->synth.drug_classes},
      {"synth", "drug_first", &c->synth.drug_first},
      {"synth", "superiority_weight", &c->synth.superiority_weight},
      {"synth", "named_sections", &c->synth.named_sections},
      {"synth", "trap_rate", &c->synth.trap_rate},
      {"synth", "statistic_rate", &c->synth.statistic_rate},
      {"synth", "modifier_rate", &c->synth.modifier_rate},
      {"synth", "swap_rate", &c->swap_rate},
      {"mine", "workers", &c->workers},
      {"build", "adversarial_ratio", &c->build.adversarial_ratio},
      {"build", "holdout", &c->build.holdout},
      {"build", "vocab_size", &c->build.vocab_size},
      {"build", "min_freq", &c->build.min_freq},
      {"build", "layout", &c->build.layout},
      {"build", "drop", &c->build.drop},
      {"build", "seed", &c->build.seed},
      {"build", "scrub_statistics", &c->build.scrub_statistics},
      {"model", "layers", &c->model.layers},
      {"model", "hidden", &c->model.hidden},
      {"model", "heads", &c->model.heads},
      {"model", "ff_dim", &c->model.ff_dim},
      {"model", "max_len", &c->model.max_len},
      {"model", "dropout", &c->model.dropout},
  };
  BindTrain("pretrain", &c->pretrain, &b);
  BindTrain("finetune", &c->finetune, &b);
  b.push_back({"finetune", "mode", &c->finetune_extras.mode});
  b.push_back(
      {"finetune", "freeze_label_head", &c->finetune_extras.freeze_label_head});
  b.push_back({"baseline", "l2", &c->logistic.l2});
  b.push_back({"baseline", "epochs", &c->logistic.epochs});
  b.push_back({"baseline", "learning_rate", &c->logistic.learning_rate});
  b.push_back({"baseline", "seed", &c->logistic.seed});
  b.push_back({"baseline", "no_match_penalty", &c->mesh.no_match_penalty});
  b.push_back({"baseline", "bridge", &c->mesh.bridge});
  b.push_back({"eval", "permutations", &c->eval.permutations});
  b.push_back({"eval", "seed", &c->eval.seed});
  return b;
}

std::string StripComment(std::string_view line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

template <typename N>
bool ParseNumber(std::string_view text, N *out) {
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, *out);
  return ec == std::errc() && ptr == end;
}

void Assign(const Target &target, std::string_view value,
            const std::string &where) {
  auto fail = [&](const char *what) {
    throw ValidationError(where + ": expected " + what + ", got \"" +
                          std::string(value) + "\"");
  };
  std::visit(
      [&](auto *p) {
        using T = std::remove_pointer_t<decltype(p)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
            fail("a quoted string");
          }
          *p = std::string(value.substr(1, value.size() - 2));
        } else if constexpr (std::is_same_v<T, bool>) {
          if (value == "true") {
            *p = true;
          } else if (value == "false") {
            *p = false;
          } else {
            fail("true or false");
          }
        } else if constexpr (std::is_same_v<T, double>) {
          if (!ParseNumber(value, p)) fail("a number");
        } else {
          if (!ParseNumber(value, p)) fail("an integer");
        }
      },
      target);
}

std::string Format(const Target &target) {
  return std::visit(
      [](auto *p) -> std::string {
        using T = std::remove_pointer_t<decltype(p)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return "\"" + *p + "\"";
        } else if constexpr (std::is_same_v<T, bool>) {
          return *p ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          char buf[32];
          auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), *p);
          return std::string(buf, end);
        } else {
          return std::to_string(*p);
        }
      },
      target);
}

}  // namespace

RunConfig::RunConfig() {
  finetune.learning_rate = 1e-4;
  finetune.epochs = 30;
  finetune.batch_size = 16;
}

void ApplyConfigText(std::string_view text, const std::string &origin,
                     RunConfig *config) {
  std::vector<Binding> bindings = Bindings(config);
  std::string section;
  size_t line_number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string where = origin + ":" + std::to_string(line_number);
    const std::string stripped = StripComment(raw);
    std::string_view line = Trim(stripped);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError(where + ": bad section");
      section = std::string(Trim(line.substr(1, line.size() - 2)));
      bool known = false;
      for (const Binding &b : bindings) known |= b.section == section;
      if (!known) {
        throw ValidationError(where + ": unknown section [" + section + "]");
      }
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(where + ": expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    const Binding *match = nullptr;
    for (const Binding &b : bindings) {
      if (b.section == section && b.key == key) match = &b;
    }
    if (match == nullptr) {
      throw ValidationError(where + ": unknown key " +
                            (section.empty() ? key : section + "." + key));
    }
    Assign(match->target, value, where);
  }
}

void ApplyConfigFile(const std::string &path, RunConfig *config) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  ApplyConfigText(buffer.str(), path, config);
}

std::string ConfigToToml(const RunConfig &config) {
  RunConfig copy = config;
  std::ostringstream out;
  std::string section;
  for (const Binding &b : Bindings(&copy)) {
    if (b.section != section) {
      if (!section.empty()) out << '\n';
      section = b.section;
      out << '[' << section << "]\n";
    }
    out << b.key << " = " << Format(b.target) << '\n';
  }
  return out.str();
}

}  // namespace ctrp
