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

#include "ctrp/synthetic.h"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include "ctrp/error.h"
#include "ctrp/lexicon.h"
#include "ctrp/text.h"
#include "json.hpp"

namespace ctrp {
namespace {

using Family = SyntheticWorld::Family;
using Rng = std::mt19937_64;

const std::vector<std::string> &DrugNames() {
  static const std::vector<std::string> kDrugs = {
      "alvarin",  "bexolide", "corantel", "daxiprone", "elmofen",
      "farudine", "gavostat", "helicor",  "ivatrane",  "jumexin",
      "kelotide", "lurastan", "movaxel",  "nerofil",   "ortaxime",
      "pelibant", "quinaril", "rosedine", "sulvatan",  "tovremid"};
  return kDrugs;
}

const std::vector<std::string> &ControlNames() {
  static const std::vector<std::string> kControls = {"placebo", "saline",
                                                     "vehicle", "usual care"};
  return kControls;
}

const std::vector<std::string> &Conditions() {
  static const std::vector<std::string> kConditions = {
      "hypertension",      "asthma",
      "migraine",          "psoriasis",
      "type 2 diabetes",   "heart failure",
      "chronic kidney disease", "rheumatoid arthritis",
      "atrial fibrillation", "major depression"};
  return kConditions;
}

std::vector<Family> DefaultFamilies() {
  using K = Family::Kind;
  return {
      {"[HIGHER]", "[LOWER]", {"higher"}, {"lower"},
       {"serum ferritin", "plasma glucose"}, K::kPlain},
      {"[GREATER]", "[SMALLER]", {"greater"}, {"smaller"},
       {"reduction in tumor volume", "gain in walking distance"}, K::kPlain},
      {"[MORE]", "[LESS]", {"more"}, {"less", "fewer"},
       {"headache episodes", "nocturnal awakenings"}, K::kMoreLess},
      {"[BETTER]", "[POORER]", {"better"}, {"poorer", "worse"},
       {"overall survival", "functional recovery"}, K::kPlain},
      {"[LONGER]", "[SHORTER]", {"longer"}, {"shorter"},
       {"hospital stay", "duration of remission"}, K::kPlain},
      {"[FASTER]", "[SLOWER]", {"faster", "quicker"}, {"slower"},
       {"wound healing", "symptom resolution"}, K::kPlain},
      {"[STRONGER]", "[WEAKER]", {"stronger"}, {"weaker"},
       {"antibody response", "grip strength"}, K::kPlain},
      {"[LATER]", "[EARLIER]", {"later"}, {"earlier"},
       {"onset of relapse", "return of symptoms"}, K::kPlain},
      {"[OLDER]", "[YOUNGER]", {"older"}, {"younger"},
       {"age at first relapse", "age at discharge"}, K::kPlain},
      {"[HEAVIER]", "[LIGHTER]", {"heavier"}, {"lighter"},
       {"body weight", "infant birth weight"}, K::kPlain},
      {"[WIDER]", "[NARROWER]", {"wider", "broader"}, {"narrower"},
       {"luminal diameter", "airway caliber"}, K::kPlain},
      {"[THICKER]", "[THINNER]", {"thicker"}, {"thinner"},
       {"cortical thickness", "intima media thickness"}, K::kPlain},
      {"[DEEPER]", "[SHALLOWER]", {"deeper"}, {"shallower"},
       {"sedation depth", "sleep depth"}, K::kPlain},
      {"[SUPERIOR]", "[INFERIOR]", {"superior"}, {"inferior"},
       {"cognitive performance", "visual acuity"}, K::kIor},
      {"[SAFER]", "[RISKIER]", {"safer"}, {"riskier"},
       {"tolerability profile", "adverse event profile"}, K::kPlain},
      {"[LARGER]", "[LESSER]", {"larger", "bigger"}, {"lesser"},
       {"infarct size", "lesion area"}, K::kPlain},
  };
}

// Placeholders: {X} first arm, {Y} second arm, {O} outcome, {S} statistic,
// {P} comparative phrase span, {C} connective span, {PC} merged span.
struct Template {
  std::string text;
  std::vector<std::string> connectives;
};

const std::vector<Template> &PlainTemplates() {
  static const std::vector<Template> kTemplates = {
      {"{O} was {P} in the {X} group {C} in the {Y} group{S}.", {"than"}},
      {"Patients receiving {X} showed {P} {O} {C} patients receiving "
       "{Y}{S}.",
       {"than"}},
      {"{O} in patients treated with {X} was {PC} patients treated with "
       "{Y}{S}.",
       {"as compared to", "compared with"}},
      {"{O} was {P} with {X} {C} {Y}{S}.", {"compared with", "compared to"}},
      {"{X} was {P} {C} {Y} with respect to {O}{S}.", {"than"}},
      {"{X} produced {P} {O} {C} {Y}{S}.", {"than"}},
  };
  return kTemplates;
}

const std::vector<Template> &IorTemplates() {
  static const std::vector<Template> kTemplates = {
      {"{X} was {P} {C} {Y} with respect to {O}{S}.", {"to"}},
      {"In terms of {O}, {X} was {P} {C} {Y}{S}.", {"to"}},
      {"{X} produced {P} {O} {C} {Y}{S}.", {"compared with"}},
  };
  return kTemplates;
}

const std::vector<Template> &MoreLessTemplates(const std::string &word) {
  static const std::vector<Template> kFrequent = {
      {"{O} were {P} frequent in the {X} group {C} in the {Y} group{S}.",
       {"than"}},
  };
  static const std::vector<Template> kMore = {
      {"{O} were {P} frequent in the {X} group {C} in the {Y} group{S}.",
       {"than"}},
      {"{X} produced {P} {O} {C} {Y}{S}.", {"than"}},
  };
  static const std::vector<Template> kFewer = {
      {"{P} {O} were observed in the {X} group {C} in the {Y} group{S}.",
       {"than"}},
      {"{X} produced {P} {O} {C} {Y}{S}.", {"than"}},
  };
  if (word == "more") return kMore;
  if (word == "fewer") return kFewer;
  return kFrequent;
}

const std::vector<Template> &NoDiffTemplates() {
  static const std::vector<Template> kTemplates = {
      {"There was {P} {X} {C} {Y} in terms of {O}{S}.", {"and"}},
      {"In terms of {O}, we found {P} {X} {C} {Y}{S}.", {"and"}},
  };
  return kTemplates;
}

const std::vector<Template> &SimilarTemplates() {
  static const std::vector<Template> kTemplates = {
      {"{O} in the {X} group was {P} {C} that in the {Y} group{S}.", {"to"}},
      {"{X} was {P} {C} {Y} with respect to {O}{S}.", {"to"}},
      {"{X} produced {P} {O} {C} {Y}{S}.", {"to"}},
  };
  return kTemplates;
}

const std::vector<std::string> &NoDiffPhrases() {
  static const std::vector<std::string> kPhrases = {
      "no difference between", "no significant difference between",
      "no statistically significant difference between"};
  return kPhrases;
}

const std::vector<std::string> &DirectionalStatistics() {
  static const std::vector<std::string> kStats = {
      " (p < 0.05)", " (P = 0.003)", " (p < 0.001)", " (95% CI 1.2-3.4)",
      " (p = 0.01)"};
  return kStats;
}

const std::vector<std::string> &NullStatistics() {
  static const std::vector<std::string> kStats = {
      " (p = 0.41)", " (P = 0.72)", " (95% CI 0.8-1.3)", " (p = 0.56)"};
  return kStats;
}

const std::vector<std::string> &BackgroundTemplates() {
  static const std::vector<std::string> kTemplates = {
      "{cond} is a frequent cause of disability.",
      "Treatment options for {cond} remain limited.",
      "The role of {X} in {cond} is uncertain.",
  };
  return kTemplates;
}

const std::vector<std::string> &MethodTemplates() {
  static const std::vector<std::string> kTemplates = {
      "Patients were followed for {k} weeks.",
      "The primary end point was {O}.",
      "Outcomes were assessed by blinded investigators.",
  };
  return kTemplates;
}

const std::vector<std::string> &TrapTemplates() {
  static const std::vector<std::string> kTemplates = {
      "Other end points were recorded after {k} weeks.",
      "We examined whether {X} altered the course of {cond}.",
      "Adherence was assessed after each visit.",
      "Dosing was adjusted rather than stopped in {k} patients.",
      "It remains unclear whether the effect persists after treatment ends.",
      "Other adverse events were mild and transient.",
      "Investigators asked whether {Y} was an appropriate control.",
      "Symptoms were scored after the run-in period.",
      "Patients preferred oral rather than intravenous dosing.",
      "After unblinding, no protocol deviations were found.",
      "Other centers used the same protocol.",
      "Further work should establish whether the dose matters.",
  };
  return kTemplates;
}

const std::vector<std::string> &ConclusionTemplates() {
  static const std::vector<std::string> kTemplates = {
      "These findings support further study of {X} in {cond}.",
      "Further trials of {X} are warranted.",
      "{X} may have a place in the management of {cond}.",
  };
  return kTemplates;
}

template <typename T>
const T &Pick(const std::vector<T> &items, Rng &rng) {
  std::uniform_int_distribution<size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

bool Chance(double p, Rng &rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

void CapitalizeFirst(std::string *s) {
  if (!s->empty() && IsAsciiLower((*s)[0])) {
    (*s)[0] = static_cast<char>((*s)[0] - 'a' + 'A');
  }
}

std::string Substitute(std::string text, const std::string &key,
                       const std::string &value) {
  for (size_t pos = text.find(key); pos != std::string::npos;
       pos = text.find(key, pos + value.size())) {
    text.replace(pos, key.size(), value);
  }
  return text;
}

struct Fillers {
  std::string x, y, outcome, condition, weeks;
};

std::string Fill(const std::string &pattern, const Fillers &f) {
  std::string out = pattern;
  out = Substitute(out, "{X}", f.x);
  out = Substitute(out, "{Y}", f.y);
  out = Substitute(out, "{O}", f.outcome);
  out = Substitute(out, "{cond}", f.condition);
  out = Substitute(out, "{k}", f.weeks);
  CapitalizeFirst(&out);
  return out;
}

struct Rendered {
  std::string sentence;
  std::vector<MaskSpan> spans;
};

// Renders a comparative template, tracking the byte ranges of the phrase
// and connective placeholders.
Rendered Render(const std::string &pattern, const Fillers &f,
                const std::string &phrase, const std::string &connective,
                const std::string &statistic) {
  Rendered out;
  size_t i = 0;
  while (i < pattern.size()) {
    if (pattern[i] != '{') {
      out.sentence += pattern[i++];
      continue;
    }
    const size_t close = pattern.find('}', i);
    const std::string key = pattern.substr(i, close + 1 - i);
    i = close + 1;
    const size_t begin = out.sentence.size();
    if (key == "{X}") {
      out.sentence += f.x;
    } else if (key == "{Y}") {
      out.sentence += f.y;
    } else if (key == "{O}") {
      out.sentence += f.outcome;
    } else if (key == "{S}") {
      out.sentence += statistic;
    } else if (key == "{P}") {
      out.sentence += phrase;
      out.spans.push_back(
          {begin, out.sentence.size(), SpanKind::kComparativePhrase});
    } else if (key == "{C}") {
      out.sentence += connective;
      out.spans.push_back({begin, out.sentence.size(), SpanKind::kConnective});
    } else if (key == "{PC}") {
      out.sentence += phrase + " " + connective;
      out.spans.push_back(
          {begin, out.sentence.size(), SpanKind::kComparativePhrase});
    }
  }
  CapitalizeFirst(&out.sentence);
  return out;
}

std::string ZeroPad(long value, int width) {
  std::string s = std::to_string(value);
  return std::string(s.size() < static_cast<size_t>(width) ? width - s.size()
                                                            : 0,
                     '0') +
         s;
}

void CheckProbability(double p, const char *name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

std::string GoldToJson(const GoldEvidence &gold) {
  nlohmann::json out;
  out["doc_id"] = gold.doc_id;
  out["background"] = gold.background;
  out["sentence"] = gold.sentence;
  out["label"] = gold.label;
  out["pattern"] = PatternName(gold.pattern);
  nlohmann::json spans = nlohmann::json::array();
  for (const MaskSpan &s : gold.spans) {
    spans.push_back({s.begin, s.end, SpanKindName(s.kind)});
  }
  out["spans"] = spans;
  return out.dump();
}

SyntheticWorld::SyntheticWorld(const SyntheticConfig &config)
    : config_(config),
      vocab_(LabelVocabulary::Default()),
      families_(DefaultFamilies()),
      drugs_(DrugNames()) {
  if (config.drug_classes < 3) {
    throw ValidationError("a synthetic world needs at least 3 drug classes");
  }
  CheckProbability(config.drug_first, "drug_first");
  CheckProbability(config.named_sections, "named_sections");
  CheckProbability(config.trap_rate, "trap_rate");
  CheckProbability(config.statistic_rate, "statistic_rate");
  CheckProbability(config.modifier_rate, "modifier_rate");
  if (config.label_weights.empty()) {
    if (!(config.superiority_weight > 0.0)) {
      throw ValidationError("superiority_weight must be positive");
    }
    for (const ComparativeLabel &label : vocab_.labels()) {
      label_weights_.push_back(label.direction == Direction::kSup
                                   ? config.superiority_weight
                                   : 1.0);
    }
  } else if (config.label_weights.size() != vocab_.size()) {
    throw ValidationError("label_weights must have one entry per label");
  } else {
    label_weights_ = config.label_weights;
    double total = 0.0;
    for (double w : label_weights_) {
      if (!(w >= 0.0)) throw ValidationError("label weights must be >= 0");
      total += w;
    }
    if (total <= 0.0) throw ValidationError("label weights sum to zero");
  }

  Rng rng(config.world_seed);
  std::shuffle(drugs_.begin(), drugs_.end(), rng);
  drug_class_.resize(drugs_.size());
  for (size_t i = 0; i < drugs_.size(); ++i) {
    drug_class_[i] = static_cast<int>(i % config.drug_classes);
  }
  // Every family gets at least one raising, one lowering and one neutral
  // class so that every label is reachable in both sentence orders.
  effect_.assign(config.drug_classes,
                 std::vector<Direction>(families_.size(), Direction::kEq));
  for (size_t f = 0; f < families_.size(); ++f) {
    std::vector<Direction> column = {Direction::kSup, Direction::kInf,
                                     Direction::kEq};
    while (static_cast<int>(column.size()) < config.drug_classes) {
      column.push_back(Chance(0.5, rng) ? Direction::kSup : Direction::kInf);
    }
    std::shuffle(column.begin(), column.end(), rng);
    for (int c = 0; c < config.drug_classes; ++c) effect_[c][f] = column[c];
  }
}

Direction SyntheticWorld::Effect(const std::string &drug,
                                 const std::string &outcome) const {
  auto d = std::find(drugs_.begin(), drugs_.end(), drug);
  if (d == drugs_.end()) throw ValidationError("unknown drug " + drug);
  for (size_t f = 0; f < families_.size(); ++f) {
    const auto &outs = families_[f].outcomes;
    if (std::find(outs.begin(), outs.end(), outcome) != outs.end()) {
      return effect_[drug_class_[d - drugs_.begin()]][f];
    }
  }
  throw ValidationError("unknown outcome " + outcome);
}

SyntheticCorpus SyntheticWorld::GenerateCorpus(uint64_t seed,
                                               int n_docs) const {
  if (n_docs < 1) throw ValidationError("n_docs must be >= 1");
  Rng rng(seed);
  std::discrete_distribution<int> label_dist(label_weights_.begin(),
                                             label_weights_.end());
  const int nodiff = vocab_.IdOf("[NODIFF]");

  SyntheticCorpus corpus;
  for (int n = 0; n < n_docs; ++n) {
    const ComparativeLabel &label = vocab_.label(label_dist(rng));
    size_t family = 0;
    if (label.direction == Direction::kEq) {
      family = std::uniform_int_distribution<size_t>(0, families_.size() - 1)(
          rng);
    } else {
      while (families_[family].sup_label != label.name &&
             families_[family].inf_label != label.name) {
        ++family;
        if (family == families_.size()) {
          throw ValidationError("label " + label.name +
                                " has no synthetic family");
        }
      }
    }
    const Family &fam = families_[family];
    const bool drug_first = Chance(config_.drug_first, rng);
    const Direction needed =
        drug_first ? label.direction : Flip(label.direction);
    std::vector<size_t> candidates;
    for (size_t d = 0; d < drugs_.size(); ++d) {
      if (effect_[drug_class_[d]][family] == needed) candidates.push_back(d);
    }
    if (candidates.empty()) {
      throw ValidationError("no drug reaches label " + label.name);
    }
    const std::string &drug = drugs_[Pick(candidates, rng)];
    const std::string &control = Pick(ControlNames(), rng);
    Fillers fill;
    fill.outcome = Pick(fam.outcomes, rng);
    fill.condition = Pick(Conditions(), rng);
    fill.weeks = std::to_string(std::uniform_int_distribution<int>(4, 52)(rng));
    fill.x = drug;
    fill.y = control;

    std::vector<std::string> background;
    background.push_back(Fill(Pick(BackgroundTemplates(), rng), fill));
    std::vector<std::string> methods;
    methods.push_back(Fill(
        "We randomly assigned {k}0 patients with {cond} to receive {X} or "
        "{Y}.",
        fill));
    methods.push_back(Fill(Pick(MethodTemplates(), rng), fill));

    // The comparative sentence.
    Fillers arms = fill;
    if (!drug_first) std::swap(arms.x, arms.y);
    const Template *tmpl = nullptr;
    std::string phrase;
    if (label.direction == Direction::kEq) {
      if (vocab_.IdOf(label.name) == nodiff) {
        tmpl = &Pick(NoDiffTemplates(), rng);
        phrase = Pick(NoDiffPhrases(), rng);
      } else {
        tmpl = &Pick(SimilarTemplates(), rng);
        phrase = Chance(0.5, rng) ? "similar" : "comparable";
      }
    } else {
      const std::string &word = Pick(
          label.direction == Direction::kSup ? fam.sup_words : fam.inf_words,
          rng);
      switch (fam.kind) {
        case Family::Kind::kPlain:
          tmpl = &Pick(PlainTemplates(), rng);
          break;
        case Family::Kind::kIor:
          tmpl = &Pick(IorTemplates(), rng);
          break;
        case Family::Kind::kMoreLess:
          tmpl = &Pick(MoreLessTemplates(word), rng);
          break;
      }
      phrase = word;
      if (Chance(config_.modifier_rate, rng)) {
        phrase = Pick(Lexicon::Default().modifiers(), rng) + " " + phrase;
      }
    }
    const std::string &connective = Pick(tmpl->connectives, rng);
    std::string statistic;
    if (Chance(config_.statistic_rate, rng)) {
      statistic = Pick(label.direction == Direction::kEq ? NullStatistics()
                                                         : DirectionalStatistics(),
                       rng);
    }
    Rendered comparative =
        Render(tmpl->text, arms, phrase, connective, statistic);

    std::vector<std::string> results;
    const bool trap_before = Chance(config_.trap_rate, rng);
    if (trap_before) results.push_back(Fill(Pick(TrapTemplates(), rng), fill));
    results.push_back(comparative.sentence);
    if (Chance(config_.trap_rate, rng)) {
      results.push_back(Fill(Pick(TrapTemplates(), rng), fill));
    }
    std::vector<std::string> conclusions = {
        Fill(Pick(ConclusionTemplates(), rng), fill)};

    Document doc;
    doc.id = "syn" + ZeroPad(n, 6);
    doc.title = "Trial of " + drug + " in " + fill.condition;
    GoldEvidence gold;
    gold.doc_id = doc.id;
    gold.sentence = comparative.sentence;
    gold.label = label.name;
    gold.pattern = label.name == "[NODIFF]"    ? PatternKind::kNoDiffBetweenAnd
                   : label.name == "[SIMILAR]" ? PatternKind::kSimilarTo
                   : fam.kind == Family::Kind::kMoreLess &&
                           (phrase.ends_with("more") || phrase.ends_with("less"))
                       ? (label.direction == Direction::kSup
                              ? PatternKind::kMoreThan
                              : PatternKind::kLessThan)
                       : PatternKind::kErThan;
    gold.spans = comparative.spans;

    std::vector<std::string> head = background;
    head.insert(head.end(), methods.begin(), methods.end());
    if (Chance(config_.named_sections, rng)) {
      const bool alt = Chance(0.5, rng);
      doc.sections.push_back({alt ? "OBJECTIVE" : "BACKGROUND",
                              Join(background, " ")});
      doc.sections.push_back({alt ? "DESIGN" : "METHODS", Join(methods, " ")});
      doc.sections.push_back({alt ? "FINDINGS" : "RESULTS", Join(results, " ")});
      doc.sections.push_back(
          {alt ? "INTERPRETATION" : "CONCLUSIONS", Join(conclusions, " ")});
      gold.background = Join(head, " ");
    } else {
      std::vector<std::string> all = head;
      if (trap_before) head.push_back(results.front());
      all.insert(all.end(), results.begin(), results.end());
      all.insert(all.end(), conclusions.begin(), conclusions.end());
      doc.sections.push_back({std::nullopt, Join(all, " ")});
      gold.background = Join(head, " ");
    }
    corpus.documents.push_back(std::move(doc));
    corpus.gold.push_back(std::move(gold));
  }
  return corpus;
}

std::vector<FinetuneInstance> SyntheticWorld::GenerateTrials(
    uint64_t seed, int n, double swap_rate) const {
  CheckProbability(swap_rate, "swap_rate");
  Rng rng(seed);
  std::vector<FinetuneInstance> out;
  for (int i = 0; i < n; ++i) {
    const size_t d =
        std::uniform_int_distribution<size_t>(0, drugs_.size() - 1)(rng);
    const size_t f =
        std::uniform_int_distribution<size_t>(0, families_.size() - 1)(rng);
    Fillers fill;
    fill.x = drugs_[d];
    fill.y = Pick(ControlNames(), rng);
    fill.outcome = Pick(families_[f].outcomes, rng);
    fill.condition = Pick(Conditions(), rng);
    fill.weeks = std::to_string(std::uniform_int_distribution<int>(4, 52)(rng));

    FinetuneInstance inst;
    inst.id = "trial" + ZeroPad(i, 6);
    inst.background =
        Fill(Pick(BackgroundTemplates(), rng), fill) + " " +
        Fill("We randomly assigned {k}0 patients with {cond} to receive {X} "
             "or {Y}.",
             fill) +
        " " + Fill(Pick(MethodTemplates(), rng), fill);
    inst.intervention = fill.x;
    inst.comparator = fill.y;
    inst.outcome = fill.outcome;
    inst.result = ResultOf(effect_[drug_class_[d]][f]);
    if (Chance(swap_rate, rng)) {
      std::swap(inst.intervention, inst.comparator);
      inst.result = ReverseResult(inst.result);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::string SyntheticWorld::MeshTsv() const {
  std::ostringstream out;
  for (size_t d = 0; d < drugs_.size(); ++d) {
    out << drugs_[d] << "\tD27.505." << ZeroPad(drug_class_[d] + 1, 3) << '.'
        << ZeroPad(static_cast<long>(d) + 1, 3) << '\n';
    out << drugs_[d] << "\tD02.241." << ZeroPad(static_cast<long>(d % 3) + 1, 3)
        << '\n';
  }
  for (size_t c = 0; c < ControlNames().size(); ++c) {
    out << ControlNames()[c] << "\tE02.183."
        << ZeroPad(static_cast<long>(c) + 1, 3) << '\n';
  }
  for (size_t f = 0; f < families_.size(); ++f) {
    for (size_t k = 0; k < families_[f].outcomes.size(); ++k) {
      out << families_[f].outcomes[k] << "\tG07.100."
          << ZeroPad(static_cast<long>(f) + 1, 3) << '.'
          << ZeroPad(static_cast<long>(k) + 1, 3) << '\n';
    }
  }
  return out.str();
}

SyntheticCorpus GenerateSyntheticCorpus(uint64_t seed, int n_docs,
                                        const SyntheticConfig &config) {
  return SyntheticWorld(config).GenerateCorpus(seed, n_docs);
}

}  // namespace ctrp
