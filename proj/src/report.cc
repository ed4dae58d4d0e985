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

#include "ctrp/report.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctrp/error.h"
#include "ctrp/text.h"
#include "json.hpp"

namespace ctrp {
namespace {

constexpr std::string_view kHeader = "id,gold,pred,p_up,p_nodiff,p_down";

std::string FormatProb(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", p);
  return buf;
}

std::string Percent(const std::optional<double> &v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *v);
  return buf;
}

std::optional<std::vector<PredictionRow>> LoadRows(
    const std::string &path, std::vector<std::string> *missing) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) {
    missing->push_back(path);
    return std::nullopt;
  }
  std::vector<PredictionRow> rows = ReadPredictionCsv(in);
  if (rows.empty()) {
    missing->push_back(path);
    return std::nullopt;
  }
  return rows;
}

nlohmann::json MetricsJson(const std::optional<Metrics> &m) {
  if (!m) return nullptr;
  return {{"accuracy", m->accuracy},
          {"macro_f1_3way", m->macro_f1_3way},
          {"macro_f1_2way", m->macro_f1_2way},
          {"f1", {m->f1[0], m->f1[1], m->f1[2]}},
          {"n", m->n}};
}

}  // namespace

void WritePredictionCsv(std::span<const PredictionRow> rows,
                        std::ostream &out) {
  out << kHeader << '\n';
  for (const PredictionRow &r : rows) {
    if (r.id.find_first_of(",\n\"") != std::string::npos) {
      throw ValidationError("instance id \"" + r.id +
                            "\" cannot be written to CSV");
    }
    out << r.id << ',' << ResultName(r.gold) << ',' << ResultName(r.pred);
    for (double p : r.probs) out << ',' << FormatProb(p);
    out << '\n';
  }
}

std::vector<PredictionRow> ReadPredictionCsv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || Trim(line) != kHeader) {
    throw ValidationError("prediction CSV must start with \"" +
                          std::string(kHeader) + "\"");
  }
  std::vector<PredictionRow> rows;
  size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    std::vector<std::string> cols = Split(Trim(line), ',');
    if (cols.size() != 6) {
      throw ValidationError("prediction CSV line " +
                            std::to_string(line_number) +
                            ": expected 6 columns");
    }
    PredictionRow r;
    r.id = cols[0];
    r.gold = ParseResult(cols[1]);
    r.pred = ParseResult(cols[2]);
    for (int k = 0; k < 3; ++k) {
      try {
        r.probs[k] = std::stod(cols[3 + k]);
      } catch (const std::exception &) {
        throw ValidationError("prediction CSV line " +
                              std::to_string(line_number) +
                              ": bad probability");
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

Metrics MetricsOf(std::span<const PredictionRow> rows) {
  ConfusionMatrix conf;
  for (const PredictionRow &r : rows) conf.Add(r.gold, r.pred);
  return ComputeMetrics(conf);
}

Report BuildReport(std::span<const SystemRun> runs, int permutations,
                   uint64_t seed) {
  Report report;
  for (const SystemRun &run : runs) {
    ReportRow row;
    row.name = run.name;
    auto standard = LoadRows(run.standard_csv, &report.missing);
    auto adversarial = LoadRows(run.adversarial_csv, &report.missing);
    if (standard) {
      row.standard = MetricsOf(*standard);
      if (permutations > 0) {
        std::vector<TrialResult> golds, preds;
        for (const PredictionRow &r : *standard) {
          golds.push_back(r.gold);
          preds.push_back(r.pred);
        }
        row.opposite = OppositeRateTest(golds, preds, permutations, seed);
      }
    }
    if (adversarial) row.adversarial = MetricsOf(*adversarial);
    if (row.standard && row.adversarial && row.standard->accuracy > 0) {
      row.delta = RobustnessDelta(row.standard->accuracy,
                                  row.adversarial->accuracy);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string ReportMarkdown(const Report &report) {
  std::ostringstream out;
  out << "| System | Std Acc | Std F1 (3-way) | Std F1 (2-way) | Adv Acc | "
         "Adv F1 (3-way) | Adv F1 (2-way) | \\|Δ\\| |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  auto cells = [](const std::optional<Metrics> &m) {
    auto pct = [&](double Metrics::*field) -> std::optional<double> {
      if (!m) return std::nullopt;
      return (*m).*field * 100.0;
    };
    return Percent(pct(&Metrics::accuracy)) + " | " +
           Percent(pct(&Metrics::macro_f1_3way)) + " | " +
           Percent(pct(&Metrics::macro_f1_2way));
  };
  for (const ReportRow &row : report.rows) {
    out << "| " << row.name << " | " << cells(row.standard) << " | "
        << cells(row.adversarial) << " | " << Percent(row.delta) << " |\n";
  }
  bool any_opposite = false;
  for (const ReportRow &row : report.rows) any_opposite |= row.opposite.has_value();
  if (any_opposite) {
    out << "\n| System | Errors | Opposite | Share | p |\n";
    out << "|---|---|---|---|---|\n";
    for (const ReportRow &row : report.rows) {
      if (!row.opposite) continue;
      const OppositeTestResult &t = *row.opposite;
      out << "| " << row.name << " | " << t.errors << " | " << t.opposite
          << " | ";
      if (t.defined) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f | %.4f |\n", 100.0 * t.share,
                      t.p_value);
        out << buf;
      } else {
        out << "- | - |\n";
      }
    }
  }
  if (!report.missing.empty()) {
    out << "\nMissing inputs:\n";
    for (const std::string &m : report.missing) out << "- " << m << '\n';
  }
  return out.str();
}

std::string ReportJson(const Report &report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow &row : report.rows) {
    nlohmann::json entry = {{"system", row.name},
                            {"standard", MetricsJson(row.standard)},
                            {"adversarial", MetricsJson(row.adversarial)},
                            {"delta", row.delta ? nlohmann::json(*row.delta)
                                                : nlohmann::json(nullptr)}};
    if (row.opposite) {
      const OppositeTestResult &t = *row.opposite;
      entry["opposite"] = {{"defined", t.defined},
                           {"errors", t.errors},
                           {"opposite", t.opposite},
                           {"share", t.share},
                           {"p_value", t.p_value},
                           {"permutations", t.permutations}};
    }
    rows.push_back(std::move(entry));
  }
  nlohmann::json out = {{"rows", rows}, {"missing", report.missing}};
  return out.dump(2) + "\n";
}

}  // namespace ctrp
