// Copyright 2026 The corrdetect Authors.
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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "corrdetect/edge_list.h"
#include "corrdetect/errors.h"
#include "corrdetect/experiment.h"
#include "corrdetect/rng.h"
#include "corrdetect/roc.h"
#include "corrdetect/sampling.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace corrdetect {
namespace {

using nlohmann::json;

std::string ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("corrdetect_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

ExperimentConfig SmallConfig() {
  ExperimentConfig c;
  c.n = 20;
  c.p = 0.3;
  c.s_values = {12, 16};
  c.rho_values = {0.5, 0.9};
  c.family = {FamilyKind::kBoundedDegree, 3, 3, 1};
  c.trials_per_cell = 10;
  c.master_seed = 42;
  c.threads = 2;
  return c;
}

double MannWhitney(const std::vector<double>& h0, const std::vector<double>& h1) {
  double wins = 0;
  for (double b : h1)
    for (double a : h0) wins += b > a ? 1.0 : (b == a ? 0.5 : 0.0);
  return wins / (h0.size() * h1.size());
}

TEST(RocTest, Examples) {
  EXPECT_DOUBLE_EQ(RocAuc({0.1, 0.4}, {0.3, 0.9}).auc, 0.75);
  EXPECT_DOUBLE_EQ(RocAuc({0.1, 0.2}, {0.5, 0.9}).auc, 1.0);
  EXPECT_DOUBLE_EQ(RocAuc({0.3, 0.3, 0.7}, {0.7, 0.3, 0.3}).auc, 0.5);
  const RocCurve c = RocAuc({0.1, 0.4}, {0.3, 0.9});
  EXPECT_EQ(c.points.front(), (std::pair<double, double>{0.0, 0.0}));
  EXPECT_EQ(c.points.back(), (std::pair<double, double>{1.0, 1.0}));
  EXPECT_THROW(RocAuc({}, {1.0}), ParameterError);
  EXPECT_THROW(RocAuc({1.0}, {std::nan("")}), ParameterError);
}

TEST(RocTest, TrapezoidEqualsMannWhitney) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> h0(1 + rng.UniformBelow(40)), h1(1 + rng.UniformBelow(40));
    // Coarse values force ties.
    for (double& x : h0) x = static_cast<double>(rng.UniformBelow(8));
    for (double& x : h1) x = static_cast<double>(rng.UniformBelow(10));
    const RocCurve c = RocAuc(h0, h1);
    EXPECT_NEAR(TrapezoidArea(c.points), MannWhitney(h0, h1), 1e-12);
    EXPECT_NEAR(c.auc, MannWhitney(h0, h1), 1e-12);
    for (size_t i = 1; i < c.points.size(); ++i) {
      EXPECT_GE(c.points[i].first, c.points[i - 1].first);
      EXPECT_GE(c.points[i].second, c.points[i - 1].second);
    }
  }
}

TEST(ConfigTest, ParsesScalarsListsAndFamilies) {
  const json doc = json::parse(R"({"n": 50, "p": 0.1, "s": 40, "rho": [0.5, 0.7],
      "family": {"kind": "trees", "ne": 3}, "trials_per_cell": 7, "master_seed": 9,
      "statistic": "it-exhaustive", "m": 3})");
  const ExperimentConfig c = ConfigFromJson(doc);
  EXPECT_EQ(c.n, 50);
  EXPECT_EQ(c.s_values, std::vector<int>{40});
  EXPECT_EQ(c.rho_values, (std::vector<double>{0.5, 0.7}));
  EXPECT_EQ(c.family.kind, FamilyKind::kTrees);
  EXPECT_EQ(c.family.ne, 3);
  EXPECT_EQ(c.statistic, StatisticKind::kItExhaustive);
  EXPECT_EQ(ConfigFromJson(ConfigToJson(c)).master_seed, 9u);
  EXPECT_EQ(ConfigHash(c), ConfigHash(ConfigFromJson(ConfigToJson(c))));
  EXPECT_EQ(ConfigHash(c).size(), 16u);
}

TEST(ConfigTest, RejectsBadDocuments) {
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"bogus": 1})")), ParameterError);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"n": "ten"})")), ParameterError);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"n": 10, "s": 11})")), ParameterError);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"family": {"kind": "cubes"}})")), ParameterError);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"family": {"size": 3}})")), ParameterError);
  EXPECT_THROW(ConfigFromJson(json::parse(R"({"statistic": "magic"})")), ParameterError);
  EXPECT_THROW(ConfigFromJson(json::parse("[1, 2]")), ParameterError);
}

TEST(SyntheticTest, RecordCountsAndOrder) {
  const ExperimentConfig c = SmallConfig();
  const ExperimentResult r = RunSynthetic(c);
  ASSERT_EQ(r.records.size(), 2u * 2 * 2 * 10);
  EXPECT_EQ(r.centering_source, "model");
  EXPECT_EQ(r.centering_p, 0.3);
  auto key = [](const TrialRecord& x) {
    return std::make_tuple(x.s, x.rho, x.hypothesis == Hypothesis::kH1, x.trial);
  };
  EXPECT_TRUE(std::is_sorted(r.records.begin(), r.records.end(),
                             [&](const auto& a, const auto& b) { return key(a) < key(b); }));
  const auto rocs = CellRocs(r.records);
  EXPECT_EQ(rocs.size(), 4u);
}

TEST(SyntheticTest, DeterministicAcrossThreadCounts) {
  ExperimentConfig c = SmallConfig();
  const std::string a = ScoresCsv(RunSynthetic(c).records);
  c.threads = 1;
  const std::string b = ScoresCsv(RunSynthetic(c).records);
  c.threads = 3;
  const std::string d = ScoresCsv(RunSynthetic(c).records);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, d);
  c.master_seed = 43;
  EXPECT_NE(ScoresCsv(RunSynthetic(c).records), a);
}

TEST(SyntheticTest, SeparatesAtFullCorrelation) {
  ExperimentConfig c;
  c.n = 12;
  c.p = 0.5;
  c.s_values = {12};
  c.rho_values = {1.0};
  c.family = {FamilyKind::kBoundedDegree, 3, 3, 1};
  c.trials_per_cell = 50;
  c.master_seed = 5;
  const ExperimentResult r = RunSynthetic(c);
  double m0 = 0, m1 = 0;
  for (const TrialRecord& x : r.records) (x.hypothesis == Hypothesis::kH0 ? m0 : m1) += x.statistic;
  EXPECT_GT(m1 / 50, m0 / 50);
}

TEST(SyntheticTest, ItStatisticMode) {
  ExperimentConfig c;
  c.n = 8;
  c.p = 0.5;
  c.s_values = {6};
  c.rho_values = {1.0};
  c.trials_per_cell = 5;
  c.statistic = StatisticKind::kItExhaustive;
  const ExperimentResult r = RunSynthetic(c);
  ASSERT_EQ(r.records.size(), 10u);
  for (const TrialRecord& x : r.records) {
    EXPECT_GE(x.statistic, 0.0);
    EXPECT_EQ(x.statistic, std::round(x.statistic));
  }
  c.n = 200;
  c.s_values = {60};
  c.m = 20;
  EXPECT_THROW(RunSynthetic(c), CapacityError);
}

SimpleGraph Ring(int n) { return SimpleGraph::Cycle(n); }

TEST(RealTest, DisjointNullSubsetsAndSharedAlternative) {
  ExperimentConfig c;
  c.mode = ExperimentMode::kReal;
  c.n = 6;
  c.s_values = {6};
  c.rho_values = {0.9};
  c.family = {FamilyKind::kBoundedDegree, 2, 2, 1};
  c.trials_per_cell = 50;
  c.master_seed = 11;
  const ExperimentResult r = RunRealOnGraph(c, Ring(20));
  EXPECT_EQ(r.centering_source, "empirical-density");
  EXPECT_NEAR(r.centering_p, 20.0 / 190, 1e-15);
  std::vector<double> h0, h1;
  for (const TrialRecord& x : r.records) {
    ASSERT_EQ(x.subset1.size(), 6u);
    if (x.hypothesis == Hypothesis::kH0) {
      std::set<int> all(x.subset1.begin(), x.subset1.end());
      all.insert(x.subset2.begin(), x.subset2.end());
      EXPECT_EQ(all.size(), 12u);
      h0.push_back(x.statistic);
    } else {
      EXPECT_EQ(x.subset1, x.subset2);
      h1.push_back(x.statistic);
    }
  }
  const double auc = RocAuc(h0, h1).auc;
  const double se = std::sqrt((h0.size() + h1.size() + 1.0) / (12.0 * h0.size() * h1.size()));
  EXPECT_GT(auc, 0.5 + 3 * se);
}

TEST(RealTest, FullSampleAlternativeIsPositive) {
  ExperimentConfig c;
  c.mode = ExperimentMode::kReal;
  c.n = 10;
  c.s_values = {10};
  c.rho_values = {0.5};
  c.family = {FamilyKind::kBoundedDegree, 1, 1, 1};
  c.trials_per_cell = 20;
  const SimpleGraph toy = SampleEr(25, 0.3, 8);
  for (const TrialRecord& x : RunRealOnGraph(c, toy).records) {
    if (x.hypothesis == Hypothesis::kH1) {
      EXPECT_GT(x.statistic, 0.0);
    }
  }
}

TEST(RealTest, SmallGraphsAndDegreeFilter) {
  ExperimentConfig c;
  c.mode = ExperimentMode::kReal;
  c.n = 6;
  c.s_values = {6};
  c.rho_values = {0.9};
  EXPECT_THROW(RunRealOnGraph(c, Ring(11)), CapacityError);
  // Star plus path: vertex 0 has the top degree, then ties broken by id.
  const SimpleGraph g(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
  const SimpleGraph top = TopDegreeSubgraph(g, 3);
  EXPECT_EQ(top, g.Induced(std::vector<int>{0, 3, 4}));
  EXPECT_EQ(TopDegreeSubgraph(g, 0), g);
}

TEST(RealTest, RunsFromEdgeListFile) {
  const auto dir = TempDir("real");
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "ring.txt");
    for (int i = 0; i < 20; ++i) out << "v" << i << " v" << (i + 1) % 20 << " 2\n";
    out << "v0 v10 1\n";  // dropped by m0 = 2
  }
  ExperimentConfig c;
  c.mode = ExperimentMode::kReal;
  c.n = 6;
  c.s_values = {5};
  c.rho_values = {0.9};
  c.trials_per_cell = 4;
  c.edgelist = (dir / "ring.txt").string();
  c.m0 = 2;
  const ExperimentResult r = RunExperiment(c);
  EXPECT_NEAR(r.centering_p, 20.0 / 190, 1e-15);
  EXPECT_EQ(r.records.size(), 8u);
  std::filesystem::remove_all(dir);
}

TEST(OutputTest, FilesAndRoundTrip) {
  const ExperimentConfig c = SmallConfig();
  const ExperimentResult r = RunSynthetic(c);
  const auto dir = TempDir("outputs");
  WriteExperimentOutputs(c, r, dir);
  const std::string scores = ReadAll(dir / "scores.csv");
  EXPECT_EQ(scores.rfind("s,rho,hypothesis,trial,statistic\n", 0), 0u);
  const auto parsed = ParseScoresCsv(scores);
  ASSERT_EQ(parsed.size(), r.records.size());
  for (size_t i = 0; i < parsed.size(); ++i) EXPECT_EQ(parsed[i].statistic, r.records[i].statistic);
  EXPECT_EQ(ScoresCsv(parsed), scores);

  const json sidecar = json::parse(ReadAll(dir / "roc_s12_rho0.5.json"));
  EXPECT_EQ(sidecar["config_hash"], ConfigHash(c));
  EXPECT_EQ(sidecar["cell"]["s"], 12);
  EXPECT_EQ(sidecar["auc"].get<double>(), CellRocs(r.records).at({12, 0.5}).auc);
  EXPECT_EQ(ReadAll(dir / "roc_s12_rho0.5.csv").rfind("fpr,tpr\n", 0), 0u);
  const json summary = json::parse(ReadAll(dir / "summary.json"));
  EXPECT_EQ(summary["records"], r.records.size());
  EXPECT_EQ(summary["cells"].size(), 4u);
  EXPECT_TRUE(std::filesystem::exists(dir / "timing.json"));

  // Every file except timing.json is byte-identical on a re-run.
  const auto again = TempDir("outputs_again");
  WriteExperimentOutputs(c, RunSynthetic(c), again);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename();
    if (name == "timing.json") continue;
    EXPECT_EQ(ReadAll(entry.path()), ReadAll(again / name)) << name;
  }
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(again);
}

TEST(OutputTest, ParseErrors) {
  EXPECT_THROW(ParseScoresCsv("a,b\n"), ParseError);
  EXPECT_THROW(ParseScoresCsv("s,rho,hypothesis,trial,statistic\n1,0.5,H2,0,1\n"), ParseError);
  EXPECT_THROW(ParseScoresCsv("s,rho,hypothesis,trial,statistic\n1,0.5,H0,0\n"), ParseError);
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(100), "100");
}

}  // namespace
}  // namespace corrdetect
