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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ctrp/error.h"
#include "json.hpp"
#include "oracles.h"

namespace ctrp {
namespace {

namespace fs = std::filesystem;

std::vector<PredictionRow> RandomRows(int n, uint64_t seed, double skill) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PredictionRow> rows;
  for (int i = 0; i < n; ++i) {
    PredictionRow r;
    r.id = "t" + std::to_string(i);
    r.gold = kAllResults[rng() % 3];
    r.pred = unit(rng) < skill ? r.gold : kAllResults[rng() % 3];
    r.probs = {0.2, 0.3, 0.5};
    r.probs[static_cast<int>(r.pred)] = 0.6;
    r.probs[(static_cast<int>(r.pred) + 1) % 3] = 0.25;
    r.probs[(static_cast<int>(r.pred) + 2) % 3] = 0.15;
    rows.push_back(r);
  }
  return rows;
}

class ReportTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ctrp_report_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string &name,
                    const std::vector<PredictionRow> &rows) {
    const std::string path = (dir_ / name).string();
    std::ofstream out(path);
    WritePredictionCsv(rows, out);
    return path;
  }

  fs::path dir_;
};

TEST_F(ReportTest, CsvRoundTrip) {
  std::vector<PredictionRow> rows = RandomRows(20, 1, 0.5);
  std::stringstream buffer;
  WritePredictionCsv(rows, buffer);
  EXPECT_EQ(buffer.str().substr(0, buffer.str().find('\n')),
            "id,gold,pred,p_up,p_nodiff,p_down");
  std::vector<PredictionRow> back = ReadPredictionCsv(buffer);
  ASSERT_EQ(back.size(), rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].id, rows[i].id);
    EXPECT_EQ(back[i].gold, rows[i].gold);
    EXPECT_EQ(back[i].pred, rows[i].pred);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(back[i].probs[k], rows[i].probs[k]);
  }
  std::istringstream bad_header("id,gold,pred\n");
  EXPECT_THROW(ReadPredictionCsv(bad_header), Error);
  std::istringstream bad_row(
      "id,gold,pred,p_up,p_nodiff,p_down\nx,up,sideways,0,0,1\n");
  EXPECT_THROW(ReadPredictionCsv(bad_row), Error);
}

TEST_F(ReportTest, TwoSystemsTwoSettings) {
  std::vector<PredictionRow> a_std = RandomRows(200, 1, 0.8);
  std::vector<PredictionRow> a_adv = RandomRows(200, 2, 0.6);
  std::vector<PredictionRow> b_std = RandomRows(200, 3, 0.5);
  std::vector<PredictionRow> b_adv = RandomRows(200, 4, 0.5);
  std::vector<SystemRun> runs = {
      {"alpha", Write("a.csv", a_std), Write("a_adv.csv", a_adv)},
      {"beta", Write("b.csv", b_std), Write("b_adv.csv", b_adv)}};
  Report report = BuildReport(runs);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_TRUE(report.missing.empty());

  // Recount from the raw rows with the brute-force oracle.
  auto recount = [](const std::vector<PredictionRow> &rows) {
    std::array<std::array<double, 3>, 3> c{};
    for (const PredictionRow &r : rows) {
      c[static_cast<int>(r.gold)][static_cast<int>(r.pred)] += 1;
    }
    return testing::BruteForceMetrics(c);
  };
  testing::OracleMetrics s = recount(a_std), a = recount(a_adv);
  const ReportRow &row = report.rows[0];
  EXPECT_EQ(row.name, "alpha");
  EXPECT_NEAR(row.standard->accuracy, s.accuracy, 1e-12);
  EXPECT_NEAR(row.standard->macro_f1_3way, s.macro3, 1e-12);
  EXPECT_NEAR(row.adversarial->macro_f1_2way, a.macro2, 1e-12);
  EXPECT_NEAR(*row.delta,
              std::abs(s.accuracy - a.accuracy) / s.accuracy * 100, 1e-9);
  EXPECT_FALSE(row.opposite.has_value());

  const std::string md = ReportMarkdown(report);
  std::istringstream lines(md);
  std::string header;
  std::getline(lines, header);
  // Name plus seven metric columns; escaped pipes are cell content.
  std::string bare;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header.compare(i, 2, "\\|") == 0) {
      ++i;
      continue;
    }
    bare += header[i];
  }
  EXPECT_EQ(std::count(bare.begin(), bare.end(), '|'), 9);
  EXPECT_NE(md.find("| alpha |"), std::string::npos);
  EXPECT_NE(md.find("| beta |"), std::string::npos);

  nlohmann::json j = nlohmann::json::parse(ReportJson(report));
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_NEAR(j["rows"][0]["standard"]["accuracy"].get<double>(), s.accuracy,
              1e-12);
}

TEST_F(ReportTest, MissingAdversarialRun) {
  std::vector<SystemRun> runs = {
      {"alpha", Write("a.csv", RandomRows(50, 1, 0.8)),
       (dir_ / "nowhere.csv").string()},
      {"beta", Write("b.csv", RandomRows(50, 2, 0.8)), ""}};
  Report report = BuildReport(runs, 1000, 3);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_TRUE(report.rows[0].standard.has_value());
  EXPECT_FALSE(report.rows[0].adversarial.has_value());
  EXPECT_FALSE(report.rows[0].delta.has_value());
  EXPECT_FALSE(report.rows[1].delta.has_value());
  ASSERT_TRUE(report.rows[0].opposite.has_value());
  EXPECT_EQ(report.rows[0].opposite->permutations, 1000);
  ASSERT_EQ(report.missing.size(), 1u);
  const std::string md = ReportMarkdown(report);
  EXPECT_NE(md.find("nowhere.csv"), std::string::npos);
  EXPECT_NE(md.find("| - |"), std::string::npos);
}

}  // namespace
}  // namespace ctrp
