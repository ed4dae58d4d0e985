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

// Prediction files and the consolidated evaluation report.
//
// Prediction CSV, one row per instance:
//   id,gold,pred,p_up,p_nodiff,p_down
// The report has one row per system with standard and adversarial accuracy,
// 3-way and 2-way macro-F1, and |delta|.

#ifndef CTRP_REPORT_H_
#define CTRP_REPORT_H_

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ctrp/instances.h"
#include "ctrp/metrics.h"

namespace ctrp {

struct PredictionRow {
  std::string id;
  TrialResult gold = TrialResult::kNoDiff;
  TrialResult pred = TrialResult::kNoDiff;
  std::array<double, 3> probs{};
};

void WritePredictionCsv(std::span<const PredictionRow> rows, std::ostream &out);
// Throws ValidationError on a wrong header or malformed row.
std::vector<PredictionRow> ReadPredictionCsv(std::istream &in);

Metrics MetricsOf(std::span<const PredictionRow> rows);

struct SystemRun {
  std::string name;
  std::string standard_csv;     // empty when not run
  std::string adversarial_csv;  // empty when not run
};

struct ReportRow {
  std::string name;
  std::optional<Metrics> standard;
  std::optional<Metrics> adversarial;
  std::optional<double> delta;  // percent; needs both settings
  // Opposite-direction share of the standard-setting errors.
  std::optional<OppositeTestResult> opposite;
};

struct Report {
  std::vector<ReportRow> rows;
  std::vector<std::string> missing;  // files that could not be read
};

// Reads every referenced CSV; unreadable files are listed in `missing` and
// their cells left absent. With `permutations` > 0 the opposite-direction
// test runs on each standard-setting file.
Report BuildReport(std::span<const SystemRun> runs, int permutations = 0,
                   uint64_t seed = 1);

// Markdown table, percentages with two decimals, "-" for absent cells,
// followed by a list of missing files if any.
std::string ReportMarkdown(const Report &report);
std::string ReportJson(const Report &report);

}  // namespace ctrp

#endif  // CTRP_REPORT_H_
