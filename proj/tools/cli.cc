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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "corrdetect/detect.h"
#include "corrdetect/edge_list.h"
#include "corrdetect/errors.h"
#include "corrdetect/experiment.h"
#include "corrdetect/low_degree.h"
#include "corrdetect/motif_families.h"
#include "corrdetect/sampling.h"
#include "fmt/format.h"
#include "json.hpp"

namespace corrdetect::cli {
namespace {

using nlohmann::json;

struct FamilyArgs {
  std::string kind = "bounded-degree";
  int ne = 4;
  int d = 4;
  int ell = 1;
};

void AddFamilyOptions(CLI::App* app, FamilyArgs& f) {
  app->add_option("--family", f.kind, "trees | bounded-degree | structured-bd | simple-no-isolated");
  app->add_option("--ne", f.ne, "edge count (trees, bounded-degree) or edge budget (simple-no-isolated)");
  app->add_option("--d", f.d, "degree bound");
  app->add_option("--ell", f.ell, "path length for structured-bd");
}

FamilySpec ToSpec(const FamilyArgs& f) {
  json doc = {{"family", {{"kind", f.kind}, {"ne", f.ne}, {"d", f.d}, {"ell", f.ell}}}};
  return ConfigFromJson(doc).family;
}

json MotifJson(const Motif& m) {
  json edges = json::array();
  for (auto [a, b] : m.edges()) edges.push_back({a, b});
  return {{"vertices", m.num_vertices()},
          {"edges", edges},
          {"key", KeyToHex(m.canonical_key())},
          {"aut", m.automorphism_count()}};
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError(fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError(fmt::format("cannot write '{}'", path.string()));
  out << text;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation detection between sampled subgraphs of correlated random graphs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "sample a correlated pair and induced subgraphs");
  int gen_n = 0, gen_s = -1;
  double gen_p = 0.0, gen_rho = 0.0;
  uint64_t seed = 1;
  std::string out_dir;
  gen->add_option("--n", gen_n, "population size")->required();
  gen->add_option("--p", gen_p, "edge probability")->required();
  gen->add_option("--rho", gen_rho, "correlation");
  gen->add_option("--s", gen_s, "sample size (default n)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out-dir", out_dir, "output directory")->required();

  auto* motifs = app.add_subcommand("motifs", "enumerate a motif family");
  FamilyArgs motif_family;
  AddFamilyOptions(motifs, motif_family);

  auto* detect = app.add_subcommand("detect", "evaluate a test statistic on two edge lists");
  std::string g1_path, g2_path, statistic = "motif";
  int det_n = 0, det_m = -1;
  double det_p = 0.0, det_rho = 0.0, det_eps = 0.1;
  FamilyArgs detect_family;
  detect->add_option("--g1", g1_path, "first edge list")->required();
  detect->add_option("--g2", g2_path, "second edge list")->required();
  detect->add_option("--n", det_n, "population size")->required();
  detect->add_option("--p", det_p, "edge probability")->required();
  detect->add_option("--rho", det_rho, "correlation")->required();
  detect->add_option("--statistic", statistic, "motif | it-exhaustive");
  detect->add_option("--m", det_m, "domain size for it-exhaustive (default floor((1-eps)s^2/n))");
  detect->add_option("--eps", det_eps, "epsilon for the it-exhaustive threshold");
  AddFamilyOptions(detect, detect_family);

  auto* experiment = app.add_subcommand("experiment", "run a configured ROC experiment");
  std::string config_path;
  int threads = -1;
  experiment->add_option("--config", config_path, "config JSON")->required();
  auto* seed_opt = experiment->add_option("--seed", seed, "override master_seed");
  experiment->add_option("--out-dir", out_dir, "output directory")->required();
  experiment->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* snr = app.add_subcommand("snr", "low-degree signal-to-noise ratio");
  int snr_n = 0, snr_s = 0, snr_d = 0;
  double snr_rho = 0.0;
  snr->add_option("--n", snr_n, "population size")->required();
  snr->add_option("--s", snr_s, "sample size")->required();
  snr->add_option("--rho", snr_rho, "correlation")->required();
  snr->add_option("--D", snr_d, "degree budget")->required();

  auto* roc = app.add_subcommand("roc", "recompute ROC curves from a scores CSV");
  std::string scores_path;
  roc->add_option("--scores", scores_path, "scores.csv")->required();
  roc->add_option("--out-dir", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const int s = gen_s < 0 ? gen_n : gen_s;
      Rng rng(seed);
      CorrelatedPair pair = SampleCorrelatedPair(gen_n, gen_p, gen_rho, rng);
      const InducedSample a = SampleInducedSubgraph(pair.g1, s, rng);
      const InducedSample b = SampleInducedSubgraph(pair.g2, s, rng);
      std::filesystem::create_directories(out_dir);
      std::ostringstream e1, e2;
      WriteEdgeList(e1, a.graph);
      WriteEdgeList(e2, b.graph);
      WriteText(std::filesystem::path(out_dir) / "g1.txt", e1.str());
      WriteText(std::filesystem::path(out_dir) / "g2.txt", e2.str());
      json meta = {{"n", gen_n}, {"p", gen_p}, {"rho", gen_rho}, {"s", s}, {"seed", seed},
                   {"pi", std::vector<int>(pair.pi.image().begin(), pair.pi.image().end())},
                   {"sample1", a.sample.chosen}, {"sample2", b.sample.chosen},
                   {"overlap", OverlapSize(a.sample, b.sample, pair.pi)}};
      WriteText(std::filesystem::path(out_dir) / "alignment.json", meta.dump(2) + "\n");
      out << meta.dump() << "\n";
    } else if (motifs->parsed()) {
      const MotifFamily family = BuildFamily(ToSpec(motif_family));
      json members = json::array();
      for (const Motif& m : family.members) members.push_back(MotifJson(m));
      out << json{{"kind", FamilyKindName(family.kind)}, {"count", family.size()}, {"members", members}}.dump(2)
          << "\n";
    } else if (detect->parsed()) {
      const SimpleGraph g1 = ReadEdgeListFile(g1_path).graph;
      const SimpleGraph g2 = ReadEdgeListFile(g2_path).graph;
      const ModelParams params{det_n, g1.num_vertices(), det_p, det_rho};
      std::vector<std::string> warnings = params.Validate();
      double value, tau;
      if (statistic == "motif") {
        WeightedFamily wf = MakeWeightedFamily(BuildFamily(ToSpec(detect_family)), params);
        warnings.insert(warnings.end(), wf.warnings.begin(), wf.warnings.end());
        value = ComputeMotifStatistic(wf, Center(g1, det_p), Center(g2, det_p));
        tau = ThresholdTauPoly(wf);
      } else if (statistic == "it-exhaustive") {
        const int m = det_m >= 0 ? det_m : DefaultItM(g1.num_vertices(), det_n, det_eps);
        value = static_cast<double>(ItStatisticExhaustive(g1, g2, m));
        tau = ItThreshold(m, det_p, params.gamma(), det_eps);
      } else {
        throw ParameterError(fmt::format("unknown statistic '{}'", statistic));
      }
      const TestOutcome o = Decide(value, tau);
      out << json{{"statistic", o.statistic}, {"threshold", o.threshold},
                  {"decision", HypothesisName(o.decision)}, {"warnings", warnings}}.dump(2)
          << "\n";
    } else if (experiment->parsed()) {
      json doc;
      try {
        doc = json::parse(ReadText(config_path));
      } catch (const json::parse_error& e) {
        throw ParameterError(fmt::format("config is not valid JSON: {}", e.what()));
      }
      ExperimentConfig config = ConfigFromJson(doc);
      if (seed_opt->count()) config.master_seed = seed;
      if (threads >= 0) config.threads = threads;
      const ExperimentResult result = RunExperiment(config);
      WriteExperimentOutputs(config, result, out_dir);
      for (const auto& [cell, curve] : CellRocs(result.records))
        out << fmt::format("s={} rho={} auc={:.4f}\n", cell.s, FormatDouble(cell.rho), curve.auc);
    } else if (snr->parsed()) {
      const SnrReport report = LowDegreeSnr(snr_n, snr_s, snr_rho, snr_d);
      json terms = json::array();
      for (const SnrTerm& t : report.terms) {
        json entry = MotifJson(t.motif);
        entry["contribution"] = t.contribution;
        terms.push_back(entry);
      }
      json doc = {{"n", snr_n}, {"s", snr_s}, {"rho", snr_rho}, {"D", snr_d}, {"snr", report.snr}, {"terms", terms}};
      if (snr_s < snr_n) doc["closed_form_bound"] = SnrClosedFormBound(snr_n, snr_s, snr_rho, snr_d);
      out << doc.dump(2) << "\n";
    } else if (roc->parsed()) {
      const std::vector<TrialRecord> records = ParseScoresCsv(ReadText(scores_path));
      std::filesystem::create_directories(out_dir);
      json cells = json::array();
      for (const auto& [cell, curve] : CellRocs(records)) {
        const std::string stem = fmt::format("roc_s{}_rho{}", cell.s, FormatDouble(cell.rho));
        WriteText(std::filesystem::path(out_dir) / (stem + ".csv"), RocCsv(curve));
        cells.push_back({{"s", cell.s}, {"rho", cell.rho}, {"auc", curve.auc}});
      }
      out << cells.dump(2) << "\n";
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace corrdetect::cli
