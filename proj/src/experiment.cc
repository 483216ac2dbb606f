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

#include "corrdetect/experiment.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "corrdetect/edge_list.h"
#include "corrdetect/errors.h"
#include "corrdetect/rng.h"
#include "corrdetect/sampling.h"
#include "fmt/format.h"

namespace corrdetect {

using nlohmann::json;

MotifFamily BuildFamily(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kTrees: return EnumerateFreeTrees(spec.ne);
    case FamilyKind::kBoundedDegree: return EnumerateBoundedDegree(spec.ne, spec.d);
    case FamilyKind::kStructuredBd: return EnumerateStructuredBd(spec.ell, spec.d);
    case FamilyKind::kSimpleNoIsolated: return EnumerateSimpleNoIsolated(spec.ne);
    case FamilyKind::kCustom: break;
  }
  throw ParameterError("custom families cannot be built from a FamilySpec");
}

void ExperimentConfig::Validate() const {
  if (n < 1) throw ParameterError("n must be positive");
  if (trials_per_cell < 1) throw ParameterError("trials_per_cell must be at least 1");
  if (s_values.empty() || rho_values.empty()) throw ParameterError("the s and rho grids must be non-empty");
  for (int s : s_values)
    if (s < 1 || s > n) throw ParameterError(fmt::format("grid value s = {} outside [1, n = {}]", s, n));
  for (double r : rho_values)
    if (!(r >= 0.0 && r <= 1.0)) throw ParameterError(fmt::format("grid value rho = {} outside [0, 1]", r));
  if (mode == ExperimentMode::kSynthetic && !(p > 0.0 && p < 1.0))
    throw ParameterError(fmt::format("p = {} outside (0, 1)", p));
  if (!(it_epsilon > 0.0 && it_epsilon < 1.0)) throw ParameterError("it_epsilon must lie in (0, 1)");
  if (mode == ExperimentMode::kReal) {
    if (!(m0 >= 1.0)) throw ParameterError("m0 must be at least 1");
    if (top_k < 0) throw ParameterError("top_k must be non-negative");
  }
  if (threads < 0) throw ParameterError("threads must be non-negative");
}

namespace {

FamilyKind ParseFamilyKind(const std::string& name) {
  for (FamilyKind k : {FamilyKind::kTrees, FamilyKind::kBoundedDegree, FamilyKind::kStructuredBd,
                       FamilyKind::kSimpleNoIsolated})
    if (FamilyKindName(k) == name) return k;
  throw ParameterError(fmt::format("unknown family kind '{}'", name));
}

template <typename T>
std::vector<T> ScalarOrList(const json& v) {
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

}  // namespace

ExperimentConfig ConfigFromJson(const json& doc) {
  if (!doc.is_object()) throw ParameterError("config must be a JSON object");
  static const std::set<std::string> known = {
      "mode", "n", "p", "s", "rho", "family", "trials_per_cell", "master_seed", "statistic",
      "it_epsilon", "m", "edgelist", "m0", "top_k", "threads"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw ParameterError(fmt::format("unknown config key '{}'", key));
  ExperimentConfig c;
  try {
    if (doc.contains("mode")) {
      const std::string mode = doc["mode"];
      if (mode == "synthetic") c.mode = ExperimentMode::kSynthetic;
      else if (mode == "real") c.mode = ExperimentMode::kReal;
      else throw ParameterError(fmt::format("unknown mode '{}'", mode));
    }
    if (doc.contains("n")) c.n = doc["n"];
    if (doc.contains("p")) c.p = doc["p"];
    if (doc.contains("s")) c.s_values = ScalarOrList<int>(doc["s"]);
    if (doc.contains("rho")) c.rho_values = ScalarOrList<double>(doc["rho"]);
    if (doc.contains("family")) {
      const json& f = doc["family"];
      if (!f.is_object()) throw ParameterError("family must be an object");
      for (const auto& [key, value] : f.items())
        if (key != "kind" && key != "ne" && key != "d" && key != "ell")
          throw ParameterError(fmt::format("unknown family key '{}'", key));
      if (f.contains("kind")) c.family.kind = ParseFamilyKind(f["kind"]);
      if (f.contains("ne")) c.family.ne = f["ne"];
      if (f.contains("d")) c.family.d = f["d"];
      if (f.contains("ell")) c.family.ell = f["ell"];
    }
    if (doc.contains("trials_per_cell")) c.trials_per_cell = doc["trials_per_cell"];
    if (doc.contains("master_seed")) c.master_seed = doc["master_seed"].get<uint64_t>();
    if (doc.contains("statistic")) {
      const std::string stat = doc["statistic"];
      if (stat == "motif") c.statistic = StatisticKind::kMotif;
      else if (stat == "it-exhaustive") c.statistic = StatisticKind::kItExhaustive;
      else throw ParameterError(fmt::format("unknown statistic '{}'", stat));
    }
    if (doc.contains("it_epsilon")) c.it_epsilon = doc["it_epsilon"];
    if (doc.contains("m")) c.m = doc["m"];
    if (doc.contains("edgelist")) c.edgelist = doc["edgelist"];
    if (doc.contains("m0")) c.m0 = doc["m0"];
    if (doc.contains("top_k")) c.top_k = doc["top_k"];
    if (doc.contains("threads")) c.threads = doc["threads"];
  } catch (const json::exception& e) {
    throw ParameterError(fmt::format("bad config value: {}", e.what()));
  }
  c.Validate();
  return c;
}

json ConfigToJson(const ExperimentConfig& c) {
  json doc;
  doc["mode"] = c.mode == ExperimentMode::kSynthetic ? "synthetic" : "real";
  doc["n"] = c.n;
  doc["p"] = c.p;
  doc["s"] = c.s_values;
  doc["rho"] = c.rho_values;
  doc["family"] = {{"kind", FamilyKindName(c.family.kind)}, {"ne", c.family.ne}, {"d", c.family.d},
                   {"ell", c.family.ell}};
  doc["trials_per_cell"] = c.trials_per_cell;
  doc["master_seed"] = c.master_seed;
  doc["statistic"] = c.statistic == StatisticKind::kMotif ? "motif" : "it-exhaustive";
  doc["it_epsilon"] = c.it_epsilon;
  doc["m"] = c.m;
  doc["edgelist"] = c.edgelist;
  doc["m0"] = c.m0;
  doc["top_k"] = c.top_k;
  return doc;
}

std::string ConfigHash(const ExperimentConfig& config) {
  const std::string text = ConfigToJson(config).dump();
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

namespace {

struct WorkItem {
  size_t cell;
  Hypothesis hypothesis;
  int trial;
};

// Evaluates one statistic on a pair of sampled subgraphs.
class CellEvaluator {
 public:
  CellEvaluator(const ExperimentConfig& config, const MotifFamily& family, int s, double rho, double p,
                std::vector<std::string>& warnings)
      : p_(p) {
    if (config.statistic == StatisticKind::kMotif) {
      WeightedFamily wf = MakeWeightedFamily(family, {config.n, s, p, rho});
      warnings.insert(warnings.end(), wf.warnings.begin(), wf.warnings.end());
      stat_ = std::make_unique<MotifStatistic>(std::move(wf));
    } else {
      m_ = config.m >= 0 ? config.m : DefaultItM(s, config.n, config.it_epsilon);
    }
  }

  double operator()(const SimpleGraph& g1, const SimpleGraph& g2) const {
    if (stat_) return stat_->Evaluate(Center(g1, p_), Center(g2, p_));
    return static_cast<double>(ItStatisticExhaustive(g1, g2, std::min({m_, g1.num_vertices(), g2.num_vertices()})));
  }

 private:
  double p_;
  int m_ = 0;
  std::unique_ptr<MotifStatistic> stat_;
};

// Runs every (cell, hypothesis, trial) item and returns sorted records.
template <typename TrialFn>
std::vector<TrialRecord> RunGrid(const ExperimentConfig& config, TrialFn trial_fn) {
  std::vector<CellKey> cells;
  for (int s : config.s_values)
    for (double rho : config.rho_values) cells.push_back({s, rho});
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<WorkItem> items;
  for (size_t c = 0; c < cells.size(); ++c)
    for (Hypothesis h : {Hypothesis::kH0, Hypothesis::kH1})
      for (int t = 0; t < config.trials_per_cell; ++t) items.push_back({c, h, t});

  std::vector<TrialRecord> records(items.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < items.size();) {
      const WorkItem& w = items[i];
      try {
        const auto start = std::chrono::steady_clock::now();
        TrialRecord r = trial_fn(w.cell, cells[w.cell], w.hypothesis, w.trial);
        r.s = cells[w.cell].s;
        r.rho = cells[w.cell].rho;
        r.hypothesis = w.hypothesis;
        r.trial = w.trial;
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        records[i] = std::move(r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = items.size();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const size_t count = std::min<size_t>(config.threads > 0 ? config.threads : hw, items.size());
  std::vector<std::thread> pool;
  for (size_t k = 1; k < count; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

uint64_t TrialSeed(const ExperimentConfig& config, const CellKey& cell, Hypothesis h, int trial) {
  return DeriveSeed(config.master_seed,
                    {static_cast<uint64_t>(config.mode), static_cast<uint64_t>(cell.s),
                     std::bit_cast<uint64_t>(cell.rho), static_cast<uint64_t>(trial),
                     static_cast<uint64_t>(h)});
}

std::vector<std::unique_ptr<CellEvaluator>> MakeEvaluators(const ExperimentConfig& config, double p,
                                                           std::vector<std::string>& warnings) {
  const MotifFamily family =
      config.statistic == StatisticKind::kMotif ? BuildFamily(config.family) : MotifFamily{};
  std::vector<CellKey> cells;
  for (int s : config.s_values)
    for (double rho : config.rho_values) cells.push_back({s, rho});
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<std::unique_ptr<CellEvaluator>> out;
  for (const CellKey& c : cells) out.push_back(std::make_unique<CellEvaluator>(config, family, c.s, c.rho, p, warnings));
  std::sort(warnings.begin(), warnings.end());
  warnings.erase(std::unique(warnings.begin(), warnings.end()), warnings.end());
  return out;
}

}  // namespace

ExperimentResult RunSynthetic(const ExperimentConfig& config) {
  config.Validate();
  ExperimentResult result{{}, config.p, "model", {}};
  const auto evaluators = MakeEvaluators(config, config.p, result.warnings);
  result.records = RunGrid(config, [&](size_t cell, const CellKey& key, Hypothesis h, int trial) {
    Rng rng(TrialSeed(config, key, h, trial));
    SimpleGraph big1, big2;
    if (h == Hypothesis::kH0) {
      big1 = SampleEr(config.n, config.p, rng);
      big2 = SampleEr(config.n, config.p, rng);
    } else {
      CorrelatedPair pair = SampleCorrelatedPair(config.n, config.p, key.rho, rng);
      big1 = std::move(pair.g1);
      big2 = std::move(pair.g2);
    }
    const InducedSample sub1 = SampleInducedSubgraph(big1, key.s, rng);
    const InducedSample sub2 = SampleInducedSubgraph(big2, key.s, rng);
    TrialRecord r{};
    r.statistic = (*evaluators[cell])(sub1.graph, sub2.graph);
    return r;
  });
  return result;
}

SimpleGraph TopDegreeSubgraph(const SimpleGraph& g, int top_k) {
  if (top_k < 0) throw ParameterError("top_k must be non-negative");
  const int n = g.num_vertices();
  if (top_k == 0 || top_k >= n) return g;
  std::vector<int> order(n), degree(n);
  std::iota(order.begin(), order.end(), 0);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });
  order.resize(top_k);
  return g.Induced(order);
}

ExperimentResult RunRealOnGraph(const ExperimentConfig& config, const SimpleGraph& graph) {
  config.Validate();
  const int big = graph.num_vertices();
  if (big < 2 * config.n)
    throw CapacityError(fmt::format("filtered graph has {} vertices; the protocol needs 2n = {}", big,
                                    2 * config.n));
  const double p_hat = graph.density();
  if (!(p_hat > 0.0 && p_hat < 1.0))
    throw DegenerateError(fmt::format("empirical density {} leaves nothing to center", p_hat));
  ExperimentResult result{{}, p_hat, "empirical-density", {}};
  const auto evaluators = MakeEvaluators(config, p_hat, result.warnings);
  result.records = RunGrid(config, [&](size_t cell, const CellKey& key, Hypothesis h, int trial) {
    Rng rng(TrialSeed(config, key, h, trial));
    TrialRecord r{};
    if (h == Hypothesis::kH0) {
      std::vector<int> both = rng.SampleWithoutReplacement(big, 2 * config.n);
      r.subset1.assign(both.begin(), both.begin() + config.n);
      r.subset2.assign(both.begin() + config.n, both.end());
    } else {
      r.subset1 = rng.SampleWithoutReplacement(big, config.n);
      r.subset2 = r.subset1;
    }
    const InducedSample sub1 = SampleInducedSubgraph(graph.Induced(r.subset1), key.s, rng);
    const InducedSample sub2 = SampleInducedSubgraph(graph.Induced(r.subset2), key.s, rng);
    r.statistic = (*evaluators[cell])(sub1.graph, sub2.graph);
    return r;
  });
  return result;
}

ExperimentResult RunReal(const ExperimentConfig& config) {
  if (config.edgelist.empty()) throw ParameterError("real mode needs an edgelist path");
  const LabeledGraph input = ReadEdgeListFile(config.edgelist, config.m0);
  return RunRealOnGraph(config, TopDegreeSubgraph(input.graph, config.top_k));
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  return config.mode == ExperimentMode::kSynthetic ? RunSynthetic(config) : RunReal(config);
}

std::map<CellKey, RocCurve> CellRocs(const std::vector<TrialRecord>& records) {
  std::map<CellKey, std::pair<std::vector<double>, std::vector<double>>> scores;
  for (const TrialRecord& r : records) {
    auto& [h0, h1] = scores[{r.s, r.rho}];
    (r.hypothesis == Hypothesis::kH0 ? h0 : h1).push_back(r.statistic);
  }
  std::map<CellKey, RocCurve> out;
  for (const auto& [cell, lists] : scores) out.emplace(cell, RocAuc(lists.first, lists.second));
  return out;
}

std::string FormatDouble(double x) { return fmt::format("{}", x); }

std::string ScoresCsv(const std::vector<TrialRecord>& records) {
  std::string out = "s,rho,hypothesis,trial,statistic\n";
  for (const TrialRecord& r : records)
    out += fmt::format("{},{},{},{},{}\n", r.s, FormatDouble(r.rho), HypothesisName(r.hypothesis), r.trial,
                       FormatDouble(r.statistic));
  return out;
}

std::string RocCsv(const RocCurve& curve) {
  std::string out = "fpr,tpr\n";
  for (const auto& [fpr, tpr] : curve.points) out += fmt::format("{},{}\n", FormatDouble(fpr), FormatDouble(tpr));
  return out;
}

std::vector<TrialRecord> ParseScoresCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "s,rho,hypothesis,trial,statistic")
    throw ParseError("expected header 's,rho,hypothesis,trial,statistic'", 1);
  std::vector<TrialRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
    if (f.size() != 5) throw ParseError(fmt::format("expected 5 columns, got {}", f.size()), line_no);
    TrialRecord r{};
    try {
      r.s = std::stoi(f[0]);
      r.rho = std::stod(f[1]);
      r.trial = std::stoi(f[3]);
      r.statistic = std::stod(f[4]);
    } catch (const std::exception&) {
      throw ParseError("malformed number", line_no);
    }
    if (f[2] == "H0") r.hypothesis = Hypothesis::kH0;
    else if (f[2] == "H1") r.hypothesis = Hypothesis::kH1;
    else throw ParseError(fmt::format("unknown hypothesis '{}'", f[2]), line_no);
    out.push_back(r);
  }
  return out;
}

namespace {

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError(fmt::format("cannot write '{}'", path.string()));
  out << text;
}

}  // namespace

void WriteExperimentOutputs(const ExperimentConfig& config, const ExperimentResult& result,
                            const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::string hash = ConfigHash(config);
  WriteFile(out_dir / "scores.csv", ScoresCsv(result.records));
  json cells = json::array();
  for (const auto& [cell, curve] : CellRocs(result.records)) {
    const std::string stem = fmt::format("roc_s{}_rho{}", cell.s, FormatDouble(cell.rho));
    WriteFile(out_dir / (stem + ".csv"), RocCsv(curve));
    json sidecar = {{"auc", curve.auc}, {"cell", {{"s", cell.s}, {"rho", cell.rho}}}, {"config_hash", hash}};
    WriteFile(out_dir / (stem + ".json"), sidecar.dump(2) + "\n");
    cells.push_back({{"s", cell.s}, {"rho", cell.rho}, {"auc", curve.auc}, {"roc_csv", stem + ".csv"}});
  }
  json summary = {{"config", ConfigToJson(config)},
                  {"config_hash", hash},
                  {"centering", {{"p", result.centering_p}, {"source", result.centering_source}}},
                  {"records", result.records.size()},
                  {"cells", cells},
                  {"warnings", result.warnings}};
  WriteFile(out_dir / "summary.json", summary.dump(2) + "\n");
  double total = 0.0;
  for (const TrialRecord& r : result.records) total += r.wall_seconds;
  json timing = {{"trial_seconds_total", total},
                 {"trial_seconds_mean", result.records.empty() ? 0.0 : total / result.records.size()}};
  WriteFile(out_dir / "timing.json", timing.dump(2) + "\n");
}

}  // namespace corrdetect
