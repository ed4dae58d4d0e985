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

// ctrp: command-line driver for the mining, dataset, training and
// evaluation stages. Stages hand off through plain files; progress and
// summaries go to standard error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctrp/adversarial.h"
#include "ctrp/baselines.h"
#include "ctrp/bow.h"
#include "ctrp/checkpoint.h"
#include "ctrp/corpus.h"
#include "ctrp/dataset.h"
#include "ctrp/error.h"
#include "ctrp/evidence.h"
#include "ctrp/instances.h"
#include "ctrp/labels.h"
#include "ctrp/lexicon.h"
#include "ctrp/mesh.h"
#include "ctrp/metrics.h"
#include "ctrp/miner.h"
#include "ctrp/model.h"
#include "ctrp/report.h"
#include "ctrp/run_config.h"
#include "ctrp/synthetic.h"
#include "ctrp/text.h"
#include "ctrp/tokenizer.h"
#include "ctrp/trainer.h"
#include "json.hpp"

namespace ctrp {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

void Log(const std::string &stage, const std::string &message) {
  std::cerr << "[" << stage << "] " << message << '\n';
}

std::string Fixed(double value, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in = OpenInput(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!Trim(line).empty()) lines.push_back(line);
  }
  return lines;
}

void WriteFile(const std::string &path, const std::string &content) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

template <typename T, typename F>
void WriteJsonl(const std::string &path, const std::vector<T> &items,
                F to_json) {
  std::string content;
  for (const T &item : items) content += to_json(item) + '\n';
  WriteFile(path, content);
}

// Resolved configuration: defaults, then --config, then flags.
struct ConfigOptions {
  std::string path;
};

void AddConfigOption(CLI::App *app, ConfigOptions *options) {
  app->add_option("--config", options->path, "TOML-style config file");
}

RunConfig LoadConfig(const ConfigOptions &options) {
  RunConfig config;
  if (!options.path.empty()) ApplyConfigFile(options.path, &config);
  return config;
}

void Snapshot(const RunConfig &config, const std::string &path) {
  WriteFile(path, ConfigToToml(config));
}

struct Resources {
  LabelVocabulary vocab;
  Lexicon lexicon;
  SectionMap sections;
  SentenceSegmenter segmenter;
};

Resources LoadResources(const PathsConfig &paths) {
  auto vocab = [&] {
    if (paths.labels.empty()) return LabelVocabulary::Default();
    std::ifstream in = OpenInput(paths.labels);
    return LabelVocabulary::FromTsv(in);
  }();
  auto lexicon = [&] {
    if (paths.lexicon.empty()) return Lexicon::Default();
    std::ifstream in = OpenInput(paths.lexicon);
    return Lexicon::FromTsv(in);
  }();
  lexicon.CheckAgainst(vocab);
  auto sections = [&] {
    if (paths.sections.empty()) return SectionMap::Default();
    std::ifstream in = OpenInput(paths.sections);
    return SectionMap::FromTsv(in);
  }();
  auto segmenter = [&] {
    if (paths.abbreviations.empty()) return SentenceSegmenter();
    std::ifstream in = OpenInput(paths.abbreviations);
    return SentenceSegmenter::FromStream(in);
  }();
  return {std::move(vocab), std::move(lexicon), std::move(sections),
          std::move(segmenter)};
}

std::vector<EncodedInstance> ReadEncoded(const std::string &path) {
  std::vector<EncodedInstance> out;
  for (const std::string &line : ReadLines(path)) {
    out.push_back(EncodedFromJson(line));
  }
  return out;
}

std::vector<FinetuneInstance> ReadTrials(const std::string &path) {
  std::vector<FinetuneInstance> out;
  for (const std::string &line : ReadLines(path)) {
    out.push_back(FinetuneInstanceFromJson(line));
  }
  return out;
}

Tokenizer LoadTokenizer(const std::string &path) {
  std::ifstream in = OpenInput(path);
  return Tokenizer::Load(in);
}

void SaveTokenizer(const Tokenizer &tokenizer, const std::string &path) {
  std::ostringstream out;
  tokenizer.Save(out);
  WriteFile(path, out.str());
}

std::string PredictionCsv(const std::vector<PredictionRow> &rows) {
  std::ostringstream out;
  WritePredictionCsv(rows, out);
  return out.str();
}

// ---------------------------------------------------------------- synth

struct SynthOptions {
  ConfigOptions config;
  uint64_t seed = 7;
  int n = 1000;
  std::string out, gold, mesh, trials_out;
  int trials = 0;
  uint64_t trials_seed = 11;
  std::optional<double> swap_rate;
};

void RunSynth(const SynthOptions &o) {
  RunConfig config = LoadConfig(o.config);
  if (o.swap_rate) config.swap_rate = *o.swap_rate;
  if (o.out.empty() && o.trials_out.empty() && o.mesh.empty()) {
    throw ValidationError("synth: nothing to write (give --out, "
                          "--trials-out or --mesh)");
  }
  SyntheticWorld world(config.synth);
  std::string snapshot_next_to;
  if (!o.out.empty()) {
    SyntheticCorpus corpus = world.GenerateCorpus(o.seed, o.n);
    WriteJsonl(o.out, corpus.documents, DocumentToJson);
    if (!o.gold.empty()) WriteJsonl(o.gold, corpus.gold, GoldToJson);
    Log("synth", std::to_string(o.n) + " documents -> " + o.out);
    snapshot_next_to = o.out;
  }
  if (!o.trials_out.empty()) {
    if (o.trials < 1) throw ValidationError("synth: --trials must be >= 1");
    auto trials = world.GenerateTrials(o.trials_seed, o.trials,
                                       config.swap_rate);
    WriteJsonl(o.trials_out, trials, FinetuneInstanceToJson);
    Log("synth", std::to_string(o.trials) + " trials -> " + o.trials_out);
    if (snapshot_next_to.empty()) snapshot_next_to = o.trials_out;
  }
  if (!o.mesh.empty()) {
    WriteFile(o.mesh, world.MeshTsv());
    if (snapshot_next_to.empty()) snapshot_next_to = o.mesh;
  }
  Snapshot(config, snapshot_next_to + ".config.toml");
}

// ----------------------------------------------------------------- mine

struct MineOptions {
  ConfigOptions config;
  std::string corpus, out, rejections;
  std::optional<int> workers;
};

void RunMine(const MineOptions &o) {
  RunConfig config = LoadConfig(o.config);
  if (o.workers) config.workers = *o.workers;
  if (config.workers < 0) throw ValidationError("--workers must be >= 0");
  Resources res = LoadResources(config.paths);
  std::ifstream in = OpenInput(o.corpus);
  ParseSummary summary;
  std::vector<Document> docs = ParseCorpus(in, &summary);
  for (const ParseIssue &issue : summary.issues) {
    Log("mine", o.corpus + ":" + std::to_string(issue.line) + ": " +
                    issue.message);
  }
  MineResult result = MineCorpus(docs, res.lexicon, res.vocab, res.segmenter,
                                 res.sections, config.workers);
  WriteJsonl(o.out, result.records, RecordToJson);
  if (!o.rejections.empty()) {
    WriteJsonl(o.rejections, result.rejections, [](const Rejection &r) {
      return json{{"doc_id", r.doc_id},
                  {"sentence", r.sentence},
                  {"reason", r.reason}}
          .dump();
    });
  }
  Snapshot(config, o.out + ".config.toml");
  Log("mine", std::to_string(summary.documents) + " documents (" +
                  std::to_string(summary.skipped) + " skipped), " +
                  std::to_string(result.records.size()) + " records, " +
                  std::to_string(result.rejections.size()) + " rejected");
}

// ---------------------------------------------------------------- stats

struct StatsOptions {
  ConfigOptions config;
  std::string records, out;
};

void RunStats(const StatsOptions &o) {
  RunConfig config = LoadConfig(o.config);
  Resources res = LoadResources(config.paths);
  std::vector<ImplicitEvidenceRecord> records;
  for (const std::string &line : ReadLines(o.records)) {
    records.push_back(RecordFromJson(line, res.vocab));
  }
  DirectionStats stats = CorpusStats(records);
  std::vector<size_t> histogram(res.vocab.size(), 0);
  for (const ImplicitEvidenceRecord &r : records) {
    ++histogram[res.vocab.IdOf(r.label.name)];
  }
  json out;
  out["records"] = stats.total;
  for (Direction d : {Direction::kSup, Direction::kEq, Direction::kInf}) {
    const std::string name(DirectionName(d));
    out["counts"][name] = stats.counts[static_cast<int>(d)];
    out["fractions"][name] =
        stats.fractions ? json((*stats.fractions)[static_cast<int>(d)])
                        : json(nullptr);
  }
  for (size_t i = 0; i < histogram.size(); ++i) {
    out["labels"][res.vocab.label(static_cast<int>(i)).name] = histogram[i];
  }
  std::string line = std::to_string(stats.total) + " records";
  if (stats.fractions) {
    line += ": SUP " + Fixed(100 * (*stats.fractions)[0], 2) + "%, EQ " +
            Fixed(100 * (*stats.fractions)[1], 2) + "%, INF " +
            Fixed(100 * (*stats.fractions)[2], 2) + "%";
  }
  Log("stats", line);
  if (!o.out.empty()) WriteFile(o.out, out.dump(2) + "\n");
}

// ---------------------------------------------------------------- build

struct BuildOptions {
  ConfigOptions config;
  std::string records, trials, tokenizer, out;
  std::optional<double> adversarial_ratio;
  bool no_adversarial = false;
  std::optional<std::string> layout;
  std::vector<std::string> drop;
  std::optional<uint64_t> seed;
};

EncodeOptions MakeEncodeOptions(const BuildConfig &build) {
  EncodeOptions options;
  options.layout = ParseLayout(build.layout);
  for (const std::string &part : Split(build.drop, ',')) {
    const std::string_view letter = Trim(part);
    if (letter.empty()) continue;
    if (letter == "B") {
      options.drop_background = true;
      continue;
    }
    const std::vector<TrialElement> one = ParseLayout(letter);
    std::erase(options.layout, one.front());
  }
  if (options.layout.empty()) {
    throw ValidationError("every trial element was dropped");
  }
  return options;
}

void BuildPretrain(const RunConfig &config, const BuildOptions &o) {
  Resources res = LoadResources(config.paths);
  std::vector<ImplicitEvidenceRecord> records;
  for (const std::string &line : ReadLines(o.records)) {
    records.push_back(RecordFromJson(line, res.vocab));
  }
  auto [train_records, held_records] =
      SplitByDocument(records, config.build.holdout, config.build.seed);
  PretrainBuildOptions options;
  options.adversarial_ratio = config.build.adversarial_ratio;
  options.seed = config.build.seed;
  options.scrub_statistics = config.build.scrub_statistics;
  PretrainDataset train =
      BuildPretrainDataset(train_records, res.vocab, options);
  PretrainDataset held = BuildPretrainDataset(held_records, res.vocab, options);

  Tokenizer tokenizer = [&] {
    if (!o.tokenizer.empty()) return LoadTokenizer(o.tokenizer);
    std::vector<std::string> texts;
    for (const PretrainInstance &inst : train.instances) {
      texts.push_back(inst.background);
      texts.push_back(inst.evidence);
    }
    return Tokenizer::Train(texts, config.build.vocab_size,
                            config.build.min_freq);
  }();
  const EncodeOptions encode = MakeEncodeOptions(config.build);
  auto encode_all = [&](const PretrainDataset &ds) {
    std::vector<EncodedInstance> out;
    for (const PretrainInstance &inst : ds.instances) {
      out.push_back(Encode(tokenizer, inst, res.vocab, encode));
    }
    return out;
  };
  const fs::path dir(o.out);
  WriteJsonl((dir / "instances.jsonl").string(), train.instances,
             PretrainInstanceToJson);
  WriteJsonl((dir / "heldout_instances.jsonl").string(), held.instances,
             PretrainInstanceToJson);
  WriteJsonl((dir / "train.jsonl").string(), encode_all(train), EncodedToJson);
  WriteJsonl((dir / "heldout.jsonl").string(), encode_all(held),
             EncodedToJson);
  SaveTokenizer(tokenizer, (dir / "tokenizer.txt").string());
  std::string histogram = "label\tcount\n";
  for (size_t i = 0; i < train.histogram.size(); ++i) {
    histogram += res.vocab.label(static_cast<int>(i)).name + '\t' +
                 std::to_string(train.histogram[i]) + '\n';
  }
  WriteFile((dir / "histogram.tsv").string(), histogram);
  Snapshot(config, (dir / "config.toml").string());
  Log("build", std::to_string(train.instances.size()) + " training and " +
                   std::to_string(held.instances.size()) +
                   " held-out pre-training instances, vocabulary " +
                   std::to_string(tokenizer.size()) + " -> " + o.out);
}

void BuildFinetune(const RunConfig &config, const BuildOptions &o) {
  std::vector<FinetuneInstance> trials = ReadTrials(o.trials);
  Tokenizer tokenizer = [&] {
    if (!o.tokenizer.empty()) return LoadTokenizer(o.tokenizer);
    std::vector<std::string> texts;
    for (const FinetuneInstance &t : trials) {
      texts.push_back(t.background);
      if (t.population) texts.push_back(*t.population);
      texts.push_back(t.intervention);
      texts.push_back(t.comparator);
      texts.push_back(t.outcome);
    }
    return Tokenizer::Train(texts, config.build.vocab_size,
                            config.build.min_freq);
  }();
  const EncodeOptions encode = MakeEncodeOptions(config.build);
  std::vector<EncodedInstance> standard, adversarial;
  for (const FinetuneInstance &t : trials) {
    standard.push_back(Encode(tokenizer, t, encode));
    adversarial.push_back(Encode(tokenizer, MakeAdversarialFinetune(t), encode));
  }
  const fs::path dir(o.out);
  WriteJsonl((dir / "standard.jsonl").string(), standard, EncodedToJson);
  WriteJsonl((dir / "adversarial.jsonl").string(), adversarial, EncodedToJson);
  SaveTokenizer(tokenizer, (dir / "tokenizer.txt").string());
  Snapshot(config, (dir / "config.toml").string());
  Log("build", std::to_string(trials.size()) +
                   " trial instances (standard and adversarial), layout " +
                   LayoutToString(encode.layout) +
                   (encode.drop_background ? ", no background" : "") +
                   " -> " + o.out);
}

void RunBuild(const BuildOptions &o) {
  RunConfig config = LoadConfig(o.config);
  if (o.adversarial_ratio) config.build.adversarial_ratio = *o.adversarial_ratio;
  if (o.no_adversarial) config.build.adversarial_ratio = 0.0;
  if (o.layout) config.build.layout = *o.layout;
  if (!o.drop.empty()) config.build.drop = Join(o.drop, ",");
  if (o.seed) config.build.seed = *o.seed;
  if (o.records.empty() == o.trials.empty()) {
    throw ValidationError("build: give exactly one of --records, --trials");
  }
  if (!o.records.empty()) {
    BuildPretrain(config, o);
  } else {
    BuildFinetune(config, o);
  }
}

// ------------------------------------------------------- pretrain/finetune

struct TrainOptions {
  ConfigOptions config;
  std::string data, heldout, init, tokenizer, out;
  std::optional<int> epochs;
  std::optional<uint64_t> seed;
  std::optional<std::string> mode;
  bool freeze_label_head = false;
  int limit = 0;
};

Model InitialModel(const RunConfig &config, const TrainOptions &o,
                   uint64_t seed) {
  if (!o.init.empty()) return LoadCheckpoint(o.init).model;
  if (o.tokenizer.empty()) {
    throw ValidationError("give --init or --tokenizer to size a new model");
  }
  ModelConfig model = config.model;
  model.vocab_size = LoadTokenizer(o.tokenizer).size();
  model.Validate();
  return Model(model, seed);
}

std::map<std::string, std::string> TrainMetadata(
    const std::string &stage, const TrainConfig &train,
    const std::vector<EpochStats> &stats) {
  std::map<std::string, std::string> meta = {
      {"stage", stage},
      {"seed", std::to_string(train.seed)},
      {"epochs", std::to_string(stats.size())},
  };
  if (!stats.empty()) meta["final_loss"] = Fixed(stats.back().loss, 6);
  return meta;
}

void RunPretrain(const TrainOptions &o) {
  RunConfig config = LoadConfig(o.config);
  if (o.epochs) config.pretrain.epochs = *o.epochs;
  if (o.seed) config.pretrain.seed = *o.seed;
  config.pretrain.Validate();
  std::vector<EncodedInstance> data = ReadEncoded(o.data);
  std::vector<EncodedInstance> held;
  if (!o.heldout.empty()) held = ReadEncoded(o.heldout);
  Model model = InitialModel(config, o, config.pretrain.seed);
  config.model = model.config();
  std::vector<EpochStats> so_far;
  auto stats = Pretrain(&model, data, config.pretrain,
                        [&](const EpochStats &s) {
                          so_far.push_back(s);
                          std::string line =
                              "epoch " + std::to_string(s.epoch) + "/" +
                              std::to_string(config.pretrain.epochs) +
                              " loss " + Fixed(s.loss) + " train_acc " +
                              Fixed(s.accuracy);
                          if (!held.empty()) {
                            line += " heldout_acc " +
                                    Fixed(Accuracy(model, held, Head::kLabel));
                          }
                          Log("pretrain", line);
                          SaveCheckpoint(model,
                                         TrainMetadata("pretrain",
                                                       config.pretrain, so_far),
                                         o.out);
                          return true;
                        });
  SaveCheckpoint(model, TrainMetadata("pretrain", config.pretrain, stats),
                 o.out);
  std::ostringstream loss;
  WriteLossCsv(stats, loss);
  WriteFile(o.out + ".loss.csv", loss.str());
  Snapshot(config, o.out + ".config.toml");
}

void RunFinetune(const TrainOptions &o) {
  RunConfig config = LoadConfig(o.config);
  if (o.epochs) config.finetune.epochs = *o.epochs;
  if (o.seed) config.finetune.seed = *o.seed;
  if (o.mode) config.finetune_extras.mode = *o.mode;
  if (o.freeze_label_head) config.finetune_extras.freeze_label_head = true;
  config.finetune.Validate();
  const FinetuneMode mode = ParseFinetuneMode(config.finetune_extras.mode);
  std::vector<EncodedInstance> data = ReadEncoded(o.data);
  if (o.limit < 0) throw ValidationError("--limit must be >= 0");
  if (o.limit > 0 && static_cast<size_t>(o.limit) < data.size()) {
    data.resize(o.limit);
  }
  Model model = InitialModel(config, o, config.finetune.seed);
  config.model = model.config();
  auto stats = Finetune(
      &model, data, config.finetune, mode,
      config.finetune_extras.freeze_label_head, [&](const EpochStats &s) {
        Log("finetune", "epoch " + std::to_string(s.epoch) + "/" +
                            std::to_string(config.finetune.epochs) + " loss " +
                            Fixed(s.loss) + " train_acc " + Fixed(s.accuracy));
        return true;
      });
  auto meta = TrainMetadata("finetune", config.finetune, stats);
  meta["mode"] = std::string(FinetuneModeName(mode));
  meta["instances"] = std::to_string(data.size());
  SaveCheckpoint(model, meta, o.out);
  std::ostringstream loss;
  WriteLossCsv(stats, loss);
  WriteFile(o.out + ".loss.csv", loss.str());
  Snapshot(config, o.out + ".config.toml");
}

// -------------------------------------------------------------- predict

struct PredictOptions {
  std::string checkpoint, data, out, embeddings;
};

void RunPredict(const PredictOptions &o) {
  Model model = LoadCheckpoint(o.checkpoint).model;
  std::vector<EncodedInstance> data = ReadEncoded(o.data);
  std::vector<Prediction> preds = Predict(model, data, Head::kResult);
  std::vector<PredictionRow> rows;
  long correct = 0;
  for (size_t i = 0; i < data.size(); ++i) {
    if (data[i].label_id < 0 || data[i].label_id >= kNumResults) {
      throw ValidationError("instance " + data[i].id +
                            " has no trial result label");
    }
    PredictionRow row;
    row.id = data[i].id;
    row.gold = static_cast<TrialResult>(data[i].label_id);
    row.pred = static_cast<TrialResult>(preds[i].label);
    for (int k = 0; k < kNumResults; ++k) row.probs[k] = preds[i].probs[k];
    correct += row.gold == row.pred;
    rows.push_back(std::move(row));
  }
  WriteFile(o.out, PredictionCsv(rows));
  if (!o.embeddings.empty()) {
    RowMatrix<float> h = ExportEmbeddings(model, data);
    std::ostringstream out;
    out << "id,label";
    for (Eigen::Index j = 0; j < h.cols(); ++j) out << ",h_" << j + 1;
    out << '\n';
    char buf[32];
    for (size_t i = 0; i < data.size(); ++i) {
      out << data[i].id << ','
          << ResultName(static_cast<TrialResult>(data[i].label_id));
      for (Eigen::Index j = 0; j < h.cols(); ++j) {
        std::snprintf(buf, sizeof(buf), ",%.9g", h(i, j));
        out << buf;
      }
      out << '\n';
    }
    WriteFile(o.embeddings, out.str());
  }
  if (!data.empty()) {
    Log("predict", std::to_string(data.size()) + " instances, accuracy " +
                       Fixed(static_cast<double>(correct) / data.size()));
  }
}

// ------------------------------------------------------------- baseline

struct BaselineOptions {
  ConfigOptions config;
  std::string kind, train, test, out, mesh;
  bool adversarial = false;
  std::optional<uint64_t> seed;
};

PredictionRow OneHot(const FinetuneInstance &t, TrialResult pred) {
  PredictionRow row;
  row.id = t.id;
  row.gold = t.result;
  row.pred = pred;
  row.probs[static_cast<int>(pred)] = 1.0;
  return row;
}

void RunBaseline(const BaselineOptions &o) {
  RunConfig config = LoadConfig(o.config);
  if (o.seed) config.logistic.seed = *o.seed;
  std::vector<FinetuneInstance> train = ReadTrials(o.train);
  std::vector<FinetuneInstance> test = ReadTrials(o.test);
  if (train.empty()) throw ValidationError("empty training set " + o.train);
  if (o.adversarial) {
    for (FinetuneInstance &t : test) t = MakeAdversarialFinetune(t);
  }
  std::vector<TrialResult> train_labels;
  for (const FinetuneInstance &t : train) train_labels.push_back(t.result);

  std::vector<PredictionRow> rows;
  if (o.kind == "majority") {
    const TrialResult label = MajorityLabel(train_labels);
    for (const FinetuneInstance &t : test) rows.push_back(OneHot(t, label));
  } else if (o.kind == "random") {
    std::vector<TrialResult> test_labels;
    for (const FinetuneInstance &t : test) test_labels.push_back(t.result);
    const Metrics expected =
        RandomBaselineExpected(LabelDistribution(test_labels));
    Log("baseline", "random expected accuracy " +
                        Fixed(100 * expected.accuracy, 2) + "%, macro-F1 " +
                        Fixed(100 * expected.macro_f1_3way, 2) + "%");
    std::mt19937_64 rng(config.logistic.seed);
    std::uniform_int_distribution<int> pick(0, kNumResults - 1);
    for (const FinetuneInstance &t : test) {
      PredictionRow row = OneHot(t, static_cast<TrialResult>(pick(rng)));
      row.probs = {1.0 / 3, 1.0 / 3, 1.0 / 3};
      rows.push_back(std::move(row));
    }
  } else if (o.kind == "bow") {
    TfidfFeaturizer featurizer = TfidfFeaturizer::Fit(train);
    std::vector<SparseVector> xs;
    std::vector<int> ys;
    for (const FinetuneInstance &t : train) {
      xs.push_back(featurizer.Features(t));
      ys.push_back(static_cast<int>(t.result));
    }
    LogisticModel model =
        TrainLogistic(xs, ys, featurizer.dim(), config.logistic);
    for (const FinetuneInstance &t : test) {
      const SparseVector x = featurizer.Features(t);
      PredictionRow row = OneHot(t, model.Predict(x));
      row.probs = model.Probabilities(x);
      rows.push_back(std::move(row));
    }
  } else if (o.kind == "mesh") {
    if (o.mesh.empty()) throw ValidationError("mesh baseline needs --mesh");
    std::ifstream in = OpenInput(o.mesh);
    const MeshIndex index = MeshIndex::FromTsv(in);
    MeshNearestNeighbor nn(train, index, config.mesh);
    size_t fallbacks = 0;
    for (const FinetuneInstance &t : test) {
      const MeshPrediction p = nn.Predict(t);
      fallbacks += p.fallback;
      rows.push_back(OneHot(t, p.label));
    }
    if (fallbacks > 0) {
      Log("baseline", std::to_string(fallbacks) +
                          " test instances matched no terms; majority label "
                          "used");
    }
  } else {
    throw ValidationError("unknown baseline " + o.kind);
  }
  WriteFile(o.out, PredictionCsv(rows));
  Snapshot(config, o.out + ".config.toml");
  if (!rows.empty()) {
    const Metrics m = MetricsOf(rows);
    Log("baseline", o.kind + ": accuracy " + Fixed(100 * m.accuracy, 2) +
                        "%, macro-F1 " + Fixed(100 * m.macro_f1_3way, 2) + "%");
  }
}

// ----------------------------------------------------------------- eval

struct EvalOptions {
  ConfigOptions config;
  std::vector<std::string> systems;
  std::string out;
  std::optional<int> permutations;
  std::optional<uint64_t> seed;
};

void RunEval(const EvalOptions &o) {
  RunConfig config = LoadConfig(o.config);
  if (o.permutations) config.eval.permutations = *o.permutations;
  if (o.seed) config.eval.seed = *o.seed;
  if (config.eval.permutations != 0 && config.eval.permutations < 1000) {
    throw ValidationError("--permutations must be 0 or >= 1000");
  }
  std::vector<SystemRun> runs;
  for (const std::string &spec : o.systems) {
    const size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ValidationError("--system expects NAME=STANDARD[,ADVERSARIAL], "
                            "got " + spec);
    }
    SystemRun run;
    run.name = spec.substr(0, eq);
    std::vector<std::string> files = Split(spec.substr(eq + 1), ',');
    if (files.empty() || files.size() > 2) {
      throw ValidationError("--system expects one or two files: " + spec);
    }
    run.standard_csv = std::string(Trim(files[0]));
    if (files.size() == 2) run.adversarial_csv = std::string(Trim(files[1]));
    runs.push_back(std::move(run));
  }
  Report report =
      BuildReport(runs, config.eval.permutations, config.eval.seed);
  WriteFile(o.out + ".md", ReportMarkdown(report));
  WriteFile(o.out + ".json", ReportJson(report));
  Snapshot(config, o.out + ".config.toml");
  for (const std::string &m : report.missing) Log("eval", "missing " + m);
  Log("eval", std::to_string(report.rows.size()) + " systems -> " + o.out +
                  ".md");
}

int Main(int argc, char **argv) {
  CLI::App app{"Comparative-evidence mining, pre-training and trial result "
               "prediction"};
  app.require_subcommand(1);

  SynthOptions synth;
  CLI::App *synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic corpus and trials");
  AddConfigOption(synth_cmd, &synth.config);
  synth_cmd->add_option("--seed", synth.seed, "Corpus seed");
  synth_cmd->add_option("--n", synth.n, "Number of documents");
  synth_cmd->add_option("--out", synth.out, "Corpus JSONL output");
  synth_cmd->add_option("--gold", synth.gold, "Gold evidence JSONL output");
  synth_cmd->add_option("--mesh", synth.mesh, "Ontology TSV output");
  synth_cmd->add_option("--trials", synth.trials, "Number of trial queries");
  synth_cmd->add_option("--trials-out", synth.trials_out,
                        "Trial JSONL output");
  synth_cmd->add_option("--trials-seed", synth.trials_seed, "Trial seed");
  synth_cmd->add_option("--swap-rate", synth.swap_rate,
                        "Fraction of trials listing the control first");

  MineOptions mine;
  CLI::App *mine_cmd =
      app.add_subcommand("mine", "Mine comparative sentences from a corpus");
  AddConfigOption(mine_cmd, &mine.config);
  mine_cmd->add_option("--corpus", mine.corpus, "Corpus JSONL")->required();
  mine_cmd->add_option("--out", mine.out, "Record JSONL output")->required();
  mine_cmd->add_option("--rejections", mine.rejections,
                       "Rejected sentences JSONL output");
  mine_cmd->add_option("--workers", mine.workers,
                       "Worker threads (0: all cores)");

  StatsOptions stats;
  CLI::App *stats_cmd =
      app.add_subcommand("stats", "Direction and label statistics");
  AddConfigOption(stats_cmd, &stats.config);
  stats_cmd->add_option("--records", stats.records, "Record JSONL")
      ->required();
  stats_cmd->add_option("--out", stats.out, "JSON output");

  BuildOptions build;
  CLI::App *build_cmd =
      app.add_subcommand("build", "Build encoded datasets");
  AddConfigOption(build_cmd, &build.config);
  build_cmd->add_option("--records", build.records,
                        "Mined records (pre-training dataset)");
  build_cmd->add_option("--trials", build.trials,
                        "Trial JSONL (fine-tuning dataset)");
  build_cmd->add_option("--tokenizer", build.tokenizer,
                        "Reuse this tokenizer instead of training one");
  build_cmd->add_option("--out", build.out, "Output directory")->required();
  build_cmd->add_option("--adversarial-ratio", build.adversarial_ratio,
                        "Fraction of records with a reversed copy");
  build_cmd->add_flag("--no-adversarial", build.no_adversarial,
                      "Same as --adversarial-ratio 0");
  build_cmd->add_option("--layout", build.layout,
                        "Trial element order, e.g. I,O,C");
  build_cmd->add_option("--drop", build.drop, "Drop B, I, C or O")
      ->delimiter(',')
      ->check(CLI::IsMember({"B", "I", "C", "O"}));
  build_cmd->add_option("--seed", build.seed, "Split and shuffle seed");

  TrainOptions pretrain;
  CLI::App *pretrain_cmd =
      app.add_subcommand("pretrain", "Comparative-label pre-training");
  AddConfigOption(pretrain_cmd, &pretrain.config);
  pretrain_cmd->add_option("--data", pretrain.data, "Encoded training set")
      ->required();
  pretrain_cmd->add_option("--heldout", pretrain.heldout,
                           "Encoded held-out set");
  pretrain_cmd->add_option("--init", pretrain.init,
                           "Continue from this checkpoint");
  pretrain_cmd->add_option("--tokenizer", pretrain.tokenizer,
                           "Tokenizer sizing a new model");
  pretrain_cmd->add_option("--out", pretrain.out, "Checkpoint output")
      ->required();
  pretrain_cmd->add_option("--epochs", pretrain.epochs, "Epochs");
  pretrain_cmd->add_option("--seed", pretrain.seed, "Seed");

  TrainOptions finetune;
  CLI::App *finetune_cmd =
      app.add_subcommand("finetune", "Trial result fine-tuning");
  AddConfigOption(finetune_cmd, &finetune.config);
  finetune_cmd->add_option("--data", finetune.data, "Encoded training set")
      ->required();
  finetune_cmd->add_option("--init", finetune.init,
                           "Pre-trained checkpoint (omit to start fresh)");
  finetune_cmd->add_option("--tokenizer", finetune.tokenizer,
                           "Tokenizer sizing a fresh model");
  finetune_cmd->add_option("--out", finetune.out, "Checkpoint output")
      ->required();
  finetune_cmd->add_option("--mode", finetune.mode, "full or head_only")
      ->check(CLI::IsMember({"full", "head_only"}));
  finetune_cmd->add_flag("--freeze-label-head", finetune.freeze_label_head,
                         "Keep the label head fixed");
  finetune_cmd->add_option("--limit", finetune.limit,
                           "Use only the first N instances");
  finetune_cmd->add_option("--epochs", finetune.epochs, "Epochs");
  finetune_cmd->add_option("--seed", finetune.seed, "Seed");

  PredictOptions predict;
  CLI::App *predict_cmd =
      app.add_subcommand("predict", "Predict trial results");
  predict_cmd->add_option("--checkpoint", predict.checkpoint, "Checkpoint")
      ->required();
  predict_cmd->add_option("--data", predict.data, "Encoded instances")
      ->required();
  predict_cmd->add_option("--out", predict.out, "Prediction CSV output")
      ->required();
  predict_cmd->add_option("--embeddings", predict.embeddings,
                          "[CLS] embedding CSV output");

  BaselineOptions baseline;
  CLI::App *baseline_cmd =
      app.add_subcommand("baseline", "Run a baseline predictor");
  AddConfigOption(baseline_cmd, &baseline.config);
  baseline_cmd->add_option("--kind", baseline.kind, "Baseline")
      ->required()
      ->check(CLI::IsMember({"majority", "random", "bow", "mesh"}));
  baseline_cmd->add_option("--train", baseline.train, "Training trials")
      ->required();
  baseline_cmd->add_option("--test", baseline.test, "Test trials")
      ->required();
  baseline_cmd->add_option("--out", baseline.out, "Prediction CSV output")
      ->required();
  baseline_cmd->add_option("--mesh", baseline.mesh, "Ontology TSV");
  baseline_cmd->add_flag("--adversarial", baseline.adversarial,
                         "Evaluate on intervention/comparator-swapped tests");
  baseline_cmd->add_option("--seed", baseline.seed, "Seed");

  EvalOptions eval;
  CLI::App *eval_cmd =
      app.add_subcommand("eval", "Consolidated evaluation report");
  AddConfigOption(eval_cmd, &eval.config);
  eval_cmd->add_option("--system", eval.systems,
                       "NAME=STANDARD_CSV[,ADVERSARIAL_CSV]")
      ->required();
  eval_cmd->add_option("--out", eval.out,
                       "Report prefix (.md and .json are written)")
      ->required();
  eval_cmd->add_option("--permutations", eval.permutations,
                       "Opposite-direction test permutations (0: skip)");
  eval_cmd->add_option("--seed", eval.seed, "Permutation seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::kValidation);
  }

  try {
    if (*synth_cmd) RunSynth(synth);
    if (*mine_cmd) RunMine(mine);
    if (*stats_cmd) RunStats(stats);
    if (*build_cmd) RunBuild(build);
    if (*pretrain_cmd) RunPretrain(pretrain);
    if (*finetune_cmd) RunFinetune(finetune);
    if (*predict_cmd) RunPredict(predict);
    if (*baseline_cmd) RunBaseline(baseline);
    if (*eval_cmd) RunEval(eval);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const fs::filesystem_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::kInput);
  }
  return 0;
}

}  // namespace
}  // namespace ctrp

int main(int argc, char **argv) { return ctrp::Main(argc, argv); }
