// Copyright 2026 The alarmgame Authors.
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

#include "alarmgame/cli.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "alarmgame/error.h"
#include "alarmgame/io.h"
#include "alarmgame/mincover.h"
#include "alarmgame/model.h"
#include "alarmgame/oracles.h"
#include "alarmgame/pipeline.h"
#include "alarmgame/random.h"
#include "alarmgame/routes.h"

#ifndef ALARMGAME_VERSION
#define ALARMGAME_VERSION "0.0.0"
#endif

namespace alarmgame {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Every output of a command carries the same manifest.
struct Manifest {
  std::string command;
  Json config = Json::object();
  uint64_t seed = 0;
  std::optional<std::string> input_hash;
  std::vector<std::string> outputs;

  Json ToJson() const {
    Json j;
    j["command"] = command;
    j["config"] = config;
    j["seed"] = seed;
    j["version"] = ALARMGAME_VERSION;
    j["input_hash"] = input_hash ? Json(*input_hash) : Json(nullptr);
    j["outputs"] = outputs;
    return j;
  }
};

// Output writes go through one helper so that every file is stamped.
class OutputDir {
 public:
  OutputDir(std::string dir, Manifest manifest)
      : dir_(std::move(dir)), manifest_(std::move(manifest)) {
    fs::create_directories(dir_);
  }

  void WriteJson(const std::string& name, Json body) {
    Json doc;
    doc["manifest"] = manifest_.ToJson();
    for (auto it = body.begin(); it != body.end(); ++it) {
      doc[it.key()] = std::move(it.value());
    }
    WriteFile((fs::path(dir_) / name).string(), doc.dump(2) + "\n");
  }

  void WriteCsv(const std::string& name, const std::string& body) {
    WriteFile((fs::path(dir_) / name).string(),
              "# manifest: " + manifest_.ToJson().dump() + "\n" + body);
  }

 private:
  std::string dir_;
  Manifest manifest_;
};

struct LoadedInstance {
  Instance instance;
  std::string hash;
};

LoadedInstance Load(const std::string& path) {
  const std::string text = ReadFile(path);
  return LoadedInstance{ParseInstanceText(text), HashHex(text)};
}

CoveringPlacement ParsePlacement(const Instance& instance,
                                 const DistanceMatrix& dist,
                                 const std::string& text) {
  CoveringPlacement placement;
  for (const std::string& id : SplitList(text)) {
    placement.positions.push_back(instance.setting.VertexIndex(id));
  }
  std::sort(placement.positions.begin(), placement.positions.end());
  if (placement.positions.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty placement");
  }
  const SetCoverInstance cover = ToSetCover(instance.setting, dist);
  if (!IsCovering(cover, placement.positions)) {
    throw Error(ErrorCode::kInvalidArgument,
                "placement does not cover every target");
  }
  return placement;
}

struct OracleSelection {
  bool fc = false;
  bool pc = false;
  bool nc = false;
};

OracleSelection ParseOracles(const std::string& text) {
  OracleSelection sel;
  for (const std::string& name : SplitList(text)) {
    switch (ParseScheme(name)) {
      case Scheme::kFull: sel.fc = true; break;
      case Scheme::kPartial: sel.pc = true; break;
      case Scheme::kNone: sel.nc = true; break;
    }
  }
  if (!sel.fc && !sel.pc && !sel.nc) {
    throw Error(ErrorCode::kInvalidArgument, "no oracle selected");
  }
  return sel;
}

std::string OracleList(const OracleSelection& sel) {
  std::string s;
  auto add = [&s](const char* name) { s += s.empty() ? name : std::string(",") + name; };
  if (sel.fc) add("fc");
  if (sel.pc) add("pc");
  if (sel.nc) add("nc");
  return s;
}

FcMode ParseFcMode(const std::string& text) {
  if (text == "exact") return FcMode::kExact;
  if (text == "heuristic") return FcMode::kHeuristic;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown FC mode '" + text + "' (exact, heuristic)");
}

// Flags shared by sro, resolve and bench.
struct SolveFlags {
  std::string budget = "60s";
  uint64_t seed = 0;
  std::string fc_mode = "exact";
  int pc_restarts = 0;
  int resources_per_position = 1;
  int exact_limit = 20;
  std::size_t beam_width = 100000;

  void Register(CLI::App* app) {
    app->add_option("--budget", budget, "Time budget (60s, 500ms, 2m, 1h)")
        ->capture_default_str();
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
    app->add_option("--fc-mode", fc_mode, "FC best response: exact|heuristic")
        ->capture_default_str();
    app->add_option("--pc-restarts", pc_restarts,
                    "Random restarts of the PC search")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app->add_option("--resources-per-position", resources_per_position,
                    "Resources stationed at each placed vertex")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--exact-limit", exact_limit,
                    "Reachable targets above which route search uses a beam")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--beam-width", beam_width, "Beam width of route search")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  RouteOptions Routes() const {
    RouteOptions options;
    options.exact_limit = exact_limit;
    options.beam_width = beam_width;
    return options;
  }

  Json Echo() const {
    return Json{{"budget", budget},
                {"fc_mode", fc_mode},
                {"pc_restarts", pc_restarts},
                {"resources_per_position", resources_per_position},
                {"exact_limit", exact_limit},
                {"beam_width", beam_width}};
  }
};

// ---------------------------------------------------------------- gen

struct GenFlags {
  int targets = 20;
  double degree = 3.0;
  int deadline = 0;
  uint64_t seed = 0;
  std::string out = ".";
  std::string name = "instance.json";
};

int RunGen(const GenFlags& f, std::ostream& out) {
  GeneratorParams params;
  params.n_targets = f.targets;
  params.mean_degree = f.degree;
  params.deadline = f.deadline;
  params.seed = f.seed;
  const Instance instance = GenerateInstance(params);
  Manifest manifest;
  manifest.command = "gen";
  manifest.config = {{"targets", f.targets},
                     {"degree", f.degree},
                     {"deadline", f.deadline == 0 ? ScheduledDeadline(f.targets)
                                                  : f.deadline}};
  manifest.seed = f.seed;
  manifest.outputs = {f.name};
  OutputDir dir(f.out, manifest);
  dir.WriteJson(f.name, InstanceToJson(instance));
  out << "wrote " << (fs::path(f.out) / f.name).string() << " ("
      << instance.setting.num_targets() << " targets, "
      << instance.setting.num_edges() << " edges)\n";
  return kExitOk;
}

// ---------------------------------------------------------------- mincover

struct MinCoverFlags {
  std::string instance;
  std::string method = "auto";
  std::string budget = "60s";
  std::string out = ".";
};

int RunMinCover(const MinCoverFlags& f, std::ostream& out) {
  const LoadedInstance loaded = Load(f.instance);
  const Instance& instance = loaded.instance;
  const CoverMethod method = ParseCoverMethod(f.method);
  const auto budget = ParseDuration(f.budget);
  const DistanceMatrix dist = AllPairsDistances(instance.setting);
  const auto t0 = Clock::now();
  const MinCoverResult result = MinCover(instance.setting, dist, method, budget);
  const double wall_ms = ElapsedMs(t0);

  Manifest manifest;
  manifest.command = "mincover";
  manifest.config = {{"method", std::string(CoverMethodName(method))},
                     {"budget", f.budget}};
  manifest.input_hash = loaded.hash;
  manifest.outputs = {"mincover.json", "mincover_timings.json"};
  OutputDir dir(f.out, manifest);
  dir.WriteJson(
      "mincover.json",
      {{"method", std::string(CoverMethodName(result.method))},
       {"optimal", result.optimal},
       {"size", result.placement.size()},
       {"placement", PlacementToJson(instance.setting, result.placement)},
       {"overlap", OverlapToJson(ComputeOverlap(result.placement,
                                                instance.setting, dist))}});
  dir.WriteJson("mincover_timings.json", {{"wall_ms", wall_ms}});
  out << "min cover size " << result.placement.size() << " via "
      << CoverMethodName(result.method)
      << (result.optimal ? " (optimal)" : " (not proven optimal)") << "\n";
  // Only the exact search can stop early; greedy answers are not timeouts.
  const bool timed_out = !result.optimal &&
                         (method == CoverMethod::kExact ||
                          method == CoverMethod::kAuto);
  return timed_out ? kExitTimeout : kExitOk;
}

// ---------------------------------------------------------------- routes

struct RoutesFlags {
  std::string instance;
  std::string start;
  std::string signal;
  int exact_limit = 20;
  std::size_t beam_width = 100000;
  std::string out = ".";
};

int RunRoutes(const RoutesFlags& f, std::ostream& out) {
  const LoadedInstance loaded = Load(f.instance);
  const Instance& instance = loaded.instance;
  const DistanceMatrix dist = AllPairsDistances(instance.setting);
  const int start = instance.setting.VertexIndex(f.start);
  RouteOptions options;
  options.exact_limit = f.exact_limit;
  options.beam_width = f.beam_width;

  std::vector<int> signals;
  if (f.signal.empty()) {
    for (int s = 0; s < instance.alarm.num_signals(); ++s) signals.push_back(s);
  } else {
    signals.push_back(instance.alarm.SignalIndex(f.signal));
  }
  Json list = Json::array();
  std::size_t total = 0;
  for (int s : signals) {
    const std::vector<int> support = instance.alarm.SignalSupport(s);
    const RouteSet routes =
        CoveringRoutes(instance.setting, dist, start, support, options);
    total += routes.routes.size();
    Json entry = {{"signal", instance.alarm.signal_id(s)}};
    Json body = RouteSetToJson(instance.setting, routes);
    for (auto it = body.begin(); it != body.end(); ++it) {
      entry[it.key()] = it.value();
    }
    list.push_back(std::move(entry));
  }

  Manifest manifest;
  manifest.command = "routes";
  manifest.config = {{"start", f.start},
                     {"signal", f.signal.empty() ? Json(nullptr) : Json(f.signal)},
                     {"exact_limit", f.exact_limit},
                     {"beam_width", f.beam_width}};
  manifest.input_hash = loaded.hash;
  manifest.outputs = {"routes.json"};
  OutputDir dir(f.out, manifest);
  dir.WriteJson("routes.json", {{"start", f.start}, {"signals", list}});
  out << total << " covering routes from " << f.start << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- sro

struct SroFlags {
  std::string instance;
  std::string oracle = "pc";
  std::string placement;
  SolveFlags solve;
  std::string out = ".";
};

int RunSro(const SroFlags& f, std::ostream& out) {
  const LoadedInstance loaded = Load(f.instance);
  const Instance& instance = loaded.instance;
  const Scheme scheme = ParseScheme(f.oracle);
  const FcMode fc_mode = ParseFcMode(f.solve.fc_mode);
  const auto budget = ParseDuration(f.solve.budget);
  const auto start = Clock::now();
  const DistanceMatrix dist = AllPairsDistances(instance.setting);

  CoveringPlacement placement;
  double mincover_ms = 0.0;
  if (f.placement.empty()) {
    placement = MinCover(instance.setting, dist, CoverMethod::kAuto, budget / 2)
                    .placement;
    mincover_ms = ElapsedMs(start);
  } else {
    placement = ParsePlacement(instance, dist, f.placement);
  }

  OracleConfig config;
  config.fc = scheme == Scheme::kFull;
  config.pc = scheme == Scheme::kPartial;
  config.nc = scheme == Scheme::kNone;
  config.fc_mode = fc_mode;
  config.pc_restarts = f.solve.pc_restarts;
  config.seed = DeriveSeed(f.solve.seed, "oracles");
  config.resources_per_position = f.solve.resources_per_position;
  config.deadline = start + budget;
  RouteCache routes(instance.setting, dist, instance.alarm, f.solve.Routes());
  const auto t0 = Clock::now();
  std::vector<SchemeEvaluation> evals =
      EvaluatePlacement(instance, dist, placement, config, routes);
  const double oracle_ms = ElapsedMs(t0);
  const SchemeEvaluation& eval = evals.front();

  Manifest manifest;
  manifest.command = "sro";
  manifest.config = f.solve.Echo();
  manifest.config["oracle"] = std::string(SchemeName(scheme));
  manifest.config["placement"] =
      f.placement.empty() ? Json(nullptr) : Json(f.placement);
  manifest.seed = f.solve.seed;
  manifest.input_hash = loaded.hash;
  manifest.outputs = {"sro.json", "sro_timings.json"};
  OutputDir dir(f.out, manifest);
  Json body = {
      {"placement", PlacementToJson(instance.setting, placement)},
      {"overlap", OverlapToJson(ComputeOverlap(placement, instance.setting,
                                               dist))}};
  Json result = SchemeEvaluationToJson(instance, eval);
  for (auto it = result.begin(); it != result.end(); ++it) {
    body[it.key()] = it.value();
  }
  dir.WriteJson("sro.json", std::move(body));
  dir.WriteJson("sro_timings.json",
                {{"mincover_ms", mincover_ms}, {"oracle_ms", oracle_ms}});
  out << SchemeName(scheme) << " value " << eval.value
      << (eval.optimal ? "" : " (budget reached)") << "\n";
  return eval.optimal ? kExitOk : kExitTimeout;
}

// ---------------------------------------------------------------- resolve

struct ResolveFlags {
  std::string instance;
  std::string oracles = "fc,pc,nc";
  std::string method = "auto";
  int workers = 1;
  int max_placements = 0;
  SolveFlags solve;
  std::string out = ".";
};

void RegisterResolveOptions(CLI::App* app, ResolveFlags& f) {
  app->add_option("--oracles", f.oracles, "Comma-separated subset of fc,pc,nc")
      ->capture_default_str();
  app->add_option("--method", f.method, "Min cover method")
      ->capture_default_str();
  app->add_option("--workers", f.workers, "Placement evaluation workers")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app->add_option("--max-placements", f.max_placements,
                  "Stop after this many placements (0: no cap)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  f.solve.Register(app);
  app->add_option("--out", f.out, "Output directory")->capture_default_str();
}

ResolutionConfig MakeResolutionConfig(const ResolveFlags& f) {
  const OracleSelection sel = ParseOracles(f.oracles);
  ResolutionConfig config;
  config.time_budget = ParseDuration(f.solve.budget);
  config.oracles.fc = sel.fc;
  config.oracles.pc = sel.pc;
  config.oracles.nc = sel.nc;
  config.oracles.fc_mode = ParseFcMode(f.solve.fc_mode);
  config.oracles.pc_restarts = f.solve.pc_restarts;
  config.oracles.resources_per_position = f.solve.resources_per_position;
  config.cover_method = ParseCoverMethod(f.method);
  config.routes = f.solve.Routes();
  config.seed = f.solve.seed;
  config.workers = f.workers;
  config.max_placements = f.max_placements;
  return config;
}

Json ResolveEcho(const ResolveFlags& f) {
  Json echo = f.solve.Echo();
  echo["oracles"] = OracleList(ParseOracles(f.oracles));
  echo["method"] = std::string(CoverMethodName(ParseCoverMethod(f.method)));
  echo["workers"] = f.workers;
  echo["max_placements"] = f.max_placements;
  return echo;
}

int RunResolve(const ResolveFlags& f, std::ostream& out) {
  const LoadedInstance loaded = Load(f.instance);
  const Instance& instance = loaded.instance;
  const ResolutionConfig config = MakeResolutionConfig(f);
  const ResolutionReport report = Resolve(instance, config);

  Manifest manifest;
  manifest.command = "resolve";
  manifest.config = ResolveEcho(f);
  manifest.seed = f.solve.seed;
  manifest.input_hash = loaded.hash;
  manifest.outputs = {"report.json", "report_timings.json", "trace.csv"};
  OutputDir dir(f.out, manifest);
  dir.WriteJson("report.json", ReportToJson(instance, report));
  dir.WriteJson("report_timings.json", ReportTimingsToJson(report));
  dir.WriteCsv("trace.csv", TraceCsv(report));
  out << report.placements_evaluated << " placements of " << report.positions
      << " positions evaluated";
  for (const auto& [scheme, inc] : report.best) {
    out << "; " << SchemeName(scheme) << " " << inc.value;
  }
  out << (report.timed_out ? " (budget reached)" : "") << "\n";
  return report.timed_out ? kExitTimeout : kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchFlags {
  std::string sizes = "10,20,30,40";
  int seeds = 20;
  double degree = 3.0;
  bool aggregate_only = false;
  ResolveFlags resolve;
};

std::string RunName(int n, int k) {
  return "n" + std::to_string(n) + "_s" + std::to_string(k);
}

struct BenchRow {
  int n_targets = 0;
  uint64_t seed = 0;
  int m = 0;
  OverlapMetrics overlap;
  std::string oracle;
  double value = 0.0;
  double time_ms = 0.0;
  int placements_evaluated = 0;
};

struct RunFile {
  int n_targets = 0;
  int index = 0;
  std::string path;
};

// Run files sorted by (size, seed index), so aggregation ignores directory
// listing order.
std::vector<RunFile> ListRuns(const fs::path& runs_dir) {
  std::vector<RunFile> runs;
  if (!fs::is_directory(runs_dir)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no run directory '" + runs_dir.string() + "'");
  }
  for (const auto& entry : fs::directory_iterator(runs_dir)) {
    const std::string name = entry.path().filename().string();
    int n = 0, k = 0;
    char tail[16] = {0};
    if (std::sscanf(name.c_str(), "n%d_s%d%15s", &n, &k, tail) == 3 &&
        std::string(tail) == ".json") {
      runs.push_back({n, k, entry.path().string()});
    }
  }
  std::sort(runs.begin(), runs.end(), [](const RunFile& a, const RunFile& b) {
    return std::tie(a.n_targets, a.index) < std::tie(b.n_targets, b.index);
  });
  return runs;
}

std::vector<BenchRow> RowsOf(const Json& run, const Json* timings) {
  std::vector<BenchRow> rows;
  const Json& report = run.at("report");
  std::map<int, const Json*> placements;
  for (const Json& p : report.at("placements")) {
    placements[p.at("id").get<int>()] = &p;
  }
  for (const char* oracle : {"fc", "pc", "nc"}) {
    if (!report.at("best").contains(oracle)) continue;
    const Json& best = report.at("best").at(oracle);
    BenchRow row;
    row.n_targets = run.at("n_targets").get<int>();
    row.seed = run.at("instance_seed").get<uint64_t>();
    row.m = report.at("m").get<int>();
    const Json& overlap =
        placements.at(best.at("placement_id").get<int>())->at("overlap");
    row.overlap.eta = overlap.at("eta").get<long long>();
    row.overlap.tau = overlap.at("tau").get<double>();
    row.overlap.tau_hat = overlap.at("tau_hat").get<double>();
    row.oracle = oracle;
    row.value = best.at("value").get<double>();
    row.placements_evaluated = report.at("placements_evaluated").get<int>();
    if (timings != nullptr) {
      for (const Json& p : timings->at("placements")) {
        const Json& ms = p.at("oracle_ms");
        if (ms.contains(oracle)) row.time_ms += ms.at(oracle).get<double>();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string RowCsv(const BenchRow& r, bool with_time) {
  std::string line = std::to_string(r.n_targets) + "," + std::to_string(r.seed) +
                     "," + std::to_string(r.m) + "," +
                     std::to_string(r.overlap.eta) + "," +
                     FormatCsvNumber(r.overlap.tau) + "," +
                     FormatCsvNumber(r.overlap.tau_hat) + "," + r.oracle + "," +
                     FormatCsvNumber(r.value) + ",";
  if (with_time) line += FormatCsvNumber(r.time_ms) + ",";
  return line + std::to_string(r.placements_evaluated) + "\n";
}

// bench.csv depends only on the stored run files; wall-clock columns live in
// bench_times.csv, built from the timing sidecars.
void Aggregate(const fs::path& out_dir, std::ostream& out) {
  const std::vector<RunFile> runs = ListRuns(out_dir / "runs");
  std::string result_csv =
      "n_targets,seed,m,eta,tau,tau_hat,oracle,value,placements_evaluated\n";
  std::string times_csv =
      "n_targets,seed,m,eta,tau,tau_hat,oracle,value,time_ms,"
      "placements_evaluated\n";
  std::string all_bytes;
  Json inputs = Json::array();
  for (const RunFile& run : runs) {
    const std::string text = ReadFile(run.path);
    all_bytes += text;
    inputs.push_back(fs::path(run.path).filename().string());
    const Json doc = Json::parse(text);
    std::optional<Json> timings;
    const fs::path timing_path =
        fs::path(run.path).parent_path() /
        (RunName(run.n_targets, run.index) + "_timings.json");
    if (fs::exists(timing_path)) timings = Json::parse(ReadFile(timing_path.string()));
    for (const BenchRow& row : RowsOf(doc, timings ? &*timings : nullptr)) {
      result_csv += RowCsv(row, false);
      times_csv += RowCsv(row, true);
    }
  }
  Manifest manifest;
  manifest.command = "bench-aggregate";
  manifest.config = {{"runs", inputs}};
  manifest.input_hash = HashHex(all_bytes);
  manifest.outputs = {"bench.csv", "bench_times.csv"};
  OutputDir dir(out_dir.string(), manifest);
  dir.WriteCsv("bench.csv", result_csv);
  dir.WriteCsv("bench_times.csv", times_csv);
  out << "aggregated " << runs.size() << " runs into "
      << (out_dir / "bench.csv").string() << "\n";
}

int RunBench(const BenchFlags& f, std::ostream& out) {
  const fs::path out_dir(f.resolve.out);
  if (f.aggregate_only) {
    Aggregate(out_dir, out);
    return kExitOk;
  }
  std::vector<int> sizes;
  for (const std::string& s : SplitList(f.sizes)) {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || ptr != s.data() + s.size() || n < 1) {
      throw Error(ErrorCode::kInvalidArgument, "bad size '" + s + "'");
    }
    sizes.push_back(n);
  }
  if (sizes.empty()) throw Error(ErrorCode::kInvalidArgument, "no sizes");
  const ResolutionConfig base = MakeResolutionConfig(f.resolve);
  const Json echo = ResolveEcho(f.resolve);
  bool any_timeout = false;
  for (int n : sizes) {
    for (int k = 0; k < f.seeds; ++k) {
      GeneratorParams params;
      params.n_targets = n;
      params.mean_degree = f.degree;
      params.seed = f.resolve.solve.seed + static_cast<uint64_t>(k);
      const Instance instance = GenerateInstance(params);
      ResolutionConfig config = base;
      config.seed = params.seed;
      const ResolutionReport report = Resolve(instance, config);
      any_timeout = any_timeout || report.timed_out;

      const std::string name = RunName(n, k);
      Manifest manifest;
      manifest.command = "bench";
      manifest.config = echo;
      manifest.config["sizes"] = f.sizes;
      manifest.config["seeds"] = f.seeds;
      manifest.config["degree"] = f.degree;
      manifest.seed = f.resolve.solve.seed;
      manifest.input_hash = HashHex(InstanceToJson(instance).dump());
      manifest.outputs = {name + ".json", name + "_timings.json"};
      OutputDir dir((out_dir / "runs").string(), manifest);
      dir.WriteJson(name + ".json",
                    {{"n_targets", n},
                     {"instance_seed", params.seed},
                     {"deadline", ScheduledDeadline(n)},
                     {"report", ReportToJson(instance, report)}});
      dir.WriteJson(name + "_timings.json", ReportTimingsToJson(report));
      out << name << ": m=" << report.m << " placements="
          << report.placements_evaluated << "\n";
    }
  }
  Aggregate(out_dir, out);
  return any_timeout ? kExitTimeout : kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
    case ErrorCode::kBudgetTooSmall:
      return kExitFailure;
    default:
      return kExitInvalidInput;
  }
}

}  // namespace

std::chrono::milliseconds ParseDuration(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() &&
         (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
    ++pos;
  }
  double amount = 0.0;
  const std::string number(text.substr(0, pos));
  const auto [ptr, ec] =
      std::from_chars(number.data(), number.data() + number.size(), amount);
  if (number.empty() || ec != std::errc() ||
      ptr != number.data() + number.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad duration '" + std::string(text) + "'");
  }
  const std::string_view unit = text.substr(pos);
  double scale = 0.0;
  if (unit.empty() || unit == "s") {
    scale = 1000.0;
  } else if (unit == "ms") {
    scale = 1.0;
  } else if (unit == "m" || unit == "min") {
    scale = 60000.0;
  } else if (unit == "h") {
    scale = 3600000.0;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "bad duration unit in '" + std::string(text) + "'");
  }
  return std::chrono::milliseconds(static_cast<long long>(amount * scale + 0.5));
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Alarm-driven patrolling games: covers, routes and oracles",
               "alarmgame"};
  app.set_version_flag("--version", std::string(ALARMGAME_VERSION));
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--targets", gen.targets, "Number of targets")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--degree", gen.degree, "Mean vertex degree")
      ->capture_default_str();
  gen_cmd->add_option("--deadline", gen.deadline,
                      "Common deadline (0: size schedule)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--name", gen.name, "Output file name")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output directory")->capture_default_str();

  MinCoverFlags mc;
  CLI::App* mc_cmd = app.add_subcommand("mincover", "Minimum covering placement");
  mc_cmd->add_option("instance", mc.instance, "Instance JSON")->required();
  mc_cmd->add_option("--method", mc.method,
                     "exact, greedy, greedy+ls, tree, cycle or auto")
      ->capture_default_str();
  mc_cmd->add_option("--budget", mc.budget, "Time budget")->capture_default_str();
  mc_cmd->add_option("--out", mc.out, "Output directory")->capture_default_str();

  RoutesFlags rt;
  CLI::App* rt_cmd = app.add_subcommand("routes", "Covering routes from a vertex");
  rt_cmd->add_option("instance", rt.instance, "Instance JSON")->required();
  rt_cmd->add_option("--start", rt.start, "Start vertex id")->required();
  rt_cmd->add_option("--signal", rt.signal, "Signal id (default: all)");
  rt_cmd->add_option("--exact-limit", rt.exact_limit,
                     "Reachable targets above which a beam is used")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  rt_cmd->add_option("--beam-width", rt.beam_width, "Beam width")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  rt_cmd->add_option("--out", rt.out, "Output directory")->capture_default_str();

  SroFlags sro;
  CLI::App* sro_cmd =
      app.add_subcommand("sro", "One oracle on one placement");
  sro_cmd->add_option("instance", sro.instance, "Instance JSON")->required();
  sro_cmd->add_option("--oracle", sro.oracle, "fc, pc or nc")
      ->capture_default_str();
  sro_cmd->add_option("--placement", sro.placement,
                      "Comma-separated vertex ids (default: min cover)");
  sro.solve.Register(sro_cmd);
  sro_cmd->add_option("--out", sro.out, "Output directory")->capture_default_str();

  ResolveFlags rs;
  CLI::App* rs_cmd = app.add_subcommand("resolve", "Full anytime pipeline");
  rs_cmd->add_option("instance", rs.instance, "Instance JSON")->required();
  RegisterResolveOptions(rs_cmd, rs);

  BenchFlags bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Batch of generated instances");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated target counts")
      ->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "Instances per size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--degree", bench.degree, "Mean vertex degree")
      ->capture_default_str();
  bench_cmd->add_flag("--aggregate-only", bench.aggregate_only,
                      "Rebuild the CSVs from stored run files");
  RegisterResolveOptions(bench_cmd, bench.resolve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*gen_cmd) return RunGen(gen, out);
    if (*mc_cmd) return RunMinCover(mc, out);
    if (*rt_cmd) return RunRoutes(rt, out);
    if (*sro_cmd) return RunSro(sro, out);
    if (*rs_cmd) return RunResolve(rs, out);
    if (*bench_cmd) return RunBench(bench, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed file: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

int RunCli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return RunCli(args, std::cout, std::cerr);
}

}  // namespace alarmgame
