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

#ifndef CORRDETECT_EXPERIMENT_H_
#define CORRDETECT_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "corrdetect/detect.h"
#include "corrdetect/graph.h"
#include "corrdetect/motif_families.h"
#include "corrdetect/roc.h"
#include "json.hpp"

namespace corrdetect {

struct FamilySpec {
  FamilyKind kind = FamilyKind::kBoundedDegree;
  int ne = 4;
  int d = 4;
  int ell = 1;
};

MotifFamily BuildFamily(const FamilySpec& spec);

enum class ExperimentMode { kSynthetic, kReal };
enum class StatisticKind { kMotif, kItExhaustive };

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::kSynthetic;
  int n = 100;
  double p = 0.05;
  std::vector<int> s_values = {80, 85, 90, 95, 100};
  std::vector<double> rho_values = {0.85, 0.9, 0.95, 0.99};
  FamilySpec family;
  int trials_per_cell = 100;
  uint64_t master_seed = 1;
  StatisticKind statistic = StatisticKind::kMotif;
  double it_epsilon = 0.1;
  // Domain size for the exhaustive statistic; -1 selects the default.
  int m = -1;
  // Real mode.
  std::string edgelist;
  double m0 = 1.0;
  // Keep the top_k vertices by degree (ties by id); 0 keeps all.
  int top_k = 0;
  // Worker threads; 0 uses the hardware concurrency.
  int threads = 0;

  // ParameterError on invalid combinations.
  void Validate() const;
};

// Reads a config document; unknown keys are rejected. ParameterError on bad
// values or types.
ExperimentConfig ConfigFromJson(const nlohmann::json& doc);
nlohmann::json ConfigToJson(const ExperimentConfig& config);
// FNV-1a of the canonical config dump, as 16 hex digits.
std::string ConfigHash(const ExperimentConfig& config);

struct TrialRecord {
  int s;
  double rho;
  Hypothesis hypothesis;
  int trial;
  double statistic;
  double wall_seconds;
  // Real mode: the vertex sets (ids of the filtered graph) behind G1 and G2.
  std::vector<int> subset1;
  std::vector<int> subset2;
};

struct ExperimentResult {
  // Sorted by (s, rho, hypothesis, trial).
  std::vector<TrialRecord> records;
  // Centering probability and where it came from ("model" or
  // "empirical-density").
  double centering_p;
  std::string centering_source;
  std::vector<std::string> warnings;
};

ExperimentResult RunSynthetic(const ExperimentConfig& config);

// Degree filter for real data: the top_k vertices by degree, ties broken by
// smaller id, as an induced subgraph in rank order.
SimpleGraph TopDegreeSubgraph(const SimpleGraph& g, int top_k);

// Real-network protocol on an already filtered graph: H0 draws two disjoint
// n-subsets, H1 one n-subset used twice; each side is then subsampled to s.
// CapacityError when the graph has fewer than 2n vertices.
ExperimentResult RunRealOnGraph(const ExperimentConfig& config, const SimpleGraph& graph);
// Ingests config.edgelist with config.m0, applies the degree filter, runs.
ExperimentResult RunReal(const ExperimentConfig& config);
ExperimentResult RunExperiment(const ExperimentConfig& config);

struct CellKey {
  int s;
  double rho;
  auto operator<=>(const CellKey&) const = default;
};

std::map<CellKey, RocCurve> CellRocs(const std::vector<TrialRecord>& records);

// Formats a double as the shortest string that round-trips.
std::string FormatDouble(double x);

std::string ScoresCsv(const std::vector<TrialRecord>& records);
std::string RocCsv(const RocCurve& curve);

// Parses a scores CSV with the header written by ScoresCsv.
std::vector<TrialRecord> ParseScoresCsv(const std::string& text);

// Writes scores.csv, roc_s<s>_rho<rho>.csv with a .json sidecar per cell,
// summary.json and timing.json (the only file with wall-clock data).
void WriteExperimentOutputs(const ExperimentConfig& config, const ExperimentResult& result,
                            const std::filesystem::path& out_dir);

}  // namespace corrdetect

#endif  // CORRDETECT_EXPERIMENT_H_
