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

#include "alarmgame/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace alarmgame {
namespace {

[[noreturn]] void ParseFail(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::kParse, "key '" + key + "': " + what);
}

const Json& Require(const Json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) ParseFail(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) ParseFail(path.empty() ? key : path + "." + key,
                                 "missing");
  return *it;
}

std::string RequireString(const Json& value, const std::string& key) {
  if (!value.is_string()) ParseFail(key, "expected a string id");
  return value.get<std::string>();
}

double RequireNumber(const Json& value, const std::string& key) {
  if (!value.is_number()) ParseFail(key, "expected a number");
  return value.get<double>();
}

}  // namespace

std::string FormatCsvNumber(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

Json StrategyJson(const PatrollingSetting& setting, const RouteSet& routes,
                  const MixedStrategy& strategy) {
  Json defs = Json::object();
  Json probs = Json::object();
  for (std::size_t r = 0; r < strategy.size(); ++r) {
    if (strategy[r] <= 0.0) continue;
    const std::string id = "r" + std::to_string(r);
    defs[id] = RouteToJson(setting, routes.routes[r]);
    probs[id] = strategy[r];
  }
  return Json{{"routes", defs}, {"strategy", probs}};
}

Json DiagnosticsJson(const OracleDiagnostics& d) {
  Json j = {{"iterations", d.iterations},
            {"routes_generated", d.routes_generated},
            {"lps_solved", d.lps_solved},
            {"optimal", d.optimal},
            {"value_trace", d.value_trace}};
  if (!d.fractional_trace.empty()) j["fractional_trace"] = d.fractional_trace;
  return j;
}

}  // namespace

Instance ParseInstance(const Json& doc) {
  if (!doc.is_object()) ParseFail("<root>", "expected a JSON object");
  RawGraph raw;
  const Json& vertices = Require(doc, "vertices", "");
  if (!vertices.is_array()) ParseFail("vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    raw.vertices.push_back(
        RequireString(vertices[i], "vertices[" + std::to_string(i) + "]"));
  }
  const Json& edges = Require(doc, "edges", "");
  if (!edges.is_array()) ParseFail("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string key = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if ((e.is_array() && e.size() > 2) ||
        (e.is_object() && (e.contains("weight") || e.contains("cost")))) {
      throw Error(ErrorCode::kWeightedEdge,
                  "key '" + key + "': edges are unit-cost; weights are not "
                  "supported");
    }
    if (!e.is_array() || e.size() != 2) {
      ParseFail(key, "expected a pair of vertex ids");
    }
    raw.edges.emplace_back(RequireString(e[0], key + "[0]"),
                           RequireString(e[1], key + "[1]"));
  }
  const Json& targets = Require(doc, "targets", "");
  if (!targets.is_array()) ParseFail("targets", "expected an array");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string key = "targets[" + std::to_string(i) + "]";
    const Json& t = targets[i];
    RawTarget target;
    target.id = RequireString(Require(t, "id", key), key + ".id");
    target.value = RequireNumber(Require(t, "value", key), key + ".value");
    const Json& deadline = Require(t, "deadline", key);
    if (!deadline.is_number_integer()) {
      ParseFail(key + ".deadline", "expected an integer");
    }
    target.deadline = deadline.get<int>();
    raw.targets.push_back(std::move(target));
  }
  PatrollingSetting setting = PatrollingSetting::Build(raw);

  std::vector<RawSignal> signals;
  const Json& sig = Require(doc, "signals", "");
  if (!sig.is_array()) ParseFail("signals", "expected an array");
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const std::string key = "signals[" + std::to_string(i) + "]";
    RawSignal signal;
    signal.id = RequireString(Require(sig[i], "id", key), key + ".id");
    const Json& probs = Require(sig[i], "probs", key);
    if (!probs.is_object()) ParseFail(key + ".probs", "expected an object");
    for (auto it = probs.begin(); it != probs.end(); ++it) {
      signal.probs[it.key()] =
          RequireNumber(it.value(), key + ".probs." + it.key());
    }
    signals.push_back(std::move(signal));
  }
  AlarmSystem alarm = AlarmSystem::Build(setting, signals);
  return Instance{std::move(setting), std::move(alarm)};
}

Instance ParseInstanceText(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  return ParseInstance(doc);
}

Instance LoadInstance(const std::string& path) {
  return ParseInstanceText(ReadFile(path));
}

Json InstanceToJson(const Instance& instance) {
  const RawGraph raw = instance.setting.ToRaw();
  Json doc;
  doc["vertices"] = raw.vertices;
  Json edges = Json::array();
  for (const auto& [a, b] : raw.edges) edges.push_back(Json::array({a, b}));
  doc["edges"] = std::move(edges);
  Json targets = Json::array();
  for (const RawTarget& t : raw.targets) {
    targets.push_back({{"id", t.id}, {"value", t.value}, {"deadline", t.deadline}});
  }
  doc["targets"] = std::move(targets);
  Json signals = Json::array();
  for (const RawSignal& s : instance.alarm.ToRaw(instance.setting)) {
    Json probs = Json::object();
    // Target order, not lexicographic id order.
    for (int t = 0; t < instance.setting.num_targets(); ++t) {
      auto it = s.probs.find(instance.setting.target_id(t));
      if (it != s.probs.end()) probs[it->first] = it->second;
    }
    signals.push_back({{"id", s.id}, {"probs", std::move(probs)}});
  }
  doc["signals"] = std::move(signals);
  return doc;
}

std::string HashHex(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "write to '" + path + "' failed");
  }
}

Json PlacementToJson(const PatrollingSetting& setting,
                     const CoveringPlacement& placement) {
  Json ids = Json::array();
  for (int p : placement.positions) ids.push_back(setting.vertex_id(p));
  return ids;
}

Json RouteToJson(const PatrollingSetting& setting, const CoveringRoute& route) {
  Json visits = Json::array();
  for (std::size_t i = 0; i < route.visits.size(); ++i) {
    visits.push_back({{"target", setting.target_id(route.visits[i])},
                      {"arrival", route.arrivals[i]}});
  }
  return Json{{"start", setting.vertex_id(route.start)},
              {"visits", std::move(visits)}};
}

Json RouteSetToJson(const PatrollingSetting& setting, const RouteSet& routes) {
  Json list = Json::array();
  for (const CoveringRoute& r : routes.routes) {
    list.push_back(RouteToJson(setting, r));
  }
  return Json{{"complete", routes.complete},
              {"count", routes.routes.size()},
              {"routes", std::move(list)}};
}

Json OverlapToJson(const OverlapMetrics& metrics) {
  return Json{{"eta", metrics.eta},
              {"tau", metrics.tau},
              {"tau_hat", metrics.tau_hat}};
}

Json SchemeEvaluationToJson(const Instance& instance,
                            const SchemeEvaluation& evaluation) {
  const PatrollingSetting& setting = instance.setting;
  Json signals = Json::array();
  for (const SignalSolution& s : evaluation.signals) {
    const ResponseGame& game = s.game;
    const OracleResult& result = s.result;
    Json entry = {{"signal", instance.alarm.signal_id(s.signal)},
                  {"value", EvaluateResult(game, result)}};
    Json resources = Json::array();
    if (result.scheme == Scheme::kFull) {
      // Route definitions referenced by the joint strategy, per resource.
      std::vector<MixedStrategy> used(game.num_resources());
      for (int i = 0; i < game.num_resources(); ++i) {
        used[i].assign(game.num_routes(i), 0.0);
      }
      Json joint = Json::array();
      for (std::size_t k = 0; k < result.joint_routes.size(); ++k) {
        if (result.joint_strategy[k] <= 0.0) continue;
        Json ids = Json::array();
        for (int i = 0; i < game.num_resources(); ++i) {
          const int r = result.joint_routes[k][i];
          used[i][r] += result.joint_strategy[k];
          ids.push_back("r" + std::to_string(r));
        }
        joint.push_back({{"routes", std::move(ids)},
                         {"probability", result.joint_strategy[k]}});
      }
      for (int i = 0; i < game.num_resources(); ++i) {
        Json r = StrategyJson(setting, game.route_sets[i], used[i]);
        resources.push_back({{"position", setting.vertex_id(game.starts[i])},
                             {"routes", r["routes"]},
                             {"marginal", r["strategy"]}});
      }
      entry["resources"] = std::move(resources);
      entry["joint_strategy"] = std::move(joint);
    } else {
      for (int i = 0; i < game.num_resources(); ++i) {
        Json r = StrategyJson(setting, game.route_sets[i],
                              result.resource_strategies[i]);
        resources.push_back({{"position", setting.vertex_id(game.starts[i])},
                             {"routes", r["routes"]},
                             {"strategy", r["strategy"]}});
      }
      entry["resources"] = std::move(resources);
    }
    entry["diagnostics"] = DiagnosticsJson(result.diagnostics);
    signals.push_back(std::move(entry));
  }
  return Json{{"scheme", std::string(SchemeName(evaluation.scheme))},
              {"value", evaluation.value},
              {"optimal", evaluation.optimal},
              {"signals", std::move(signals)}};
}

Json ReportToJson(const Instance& instance, const ResolutionReport& report) {
  const PatrollingSetting& setting = instance.setting;
  Json best = Json::object();
  for (const auto& [scheme, inc] : report.best) {
    Json entry = {{"value", inc.value}, {"placement_id", inc.placement}};
    for (const PlacementRecord& rec : report.placements) {
      if (rec.id == inc.placement) {
        entry["placement"] = PlacementToJson(setting, rec.placement);
      }
    }
    best[std::string(SchemeName(scheme))] = std::move(entry);
  }
  Json placements = Json::array();
  for (const PlacementRecord& rec : report.placements) {
    Json values = Json::object();
    for (const auto& [scheme, v] : rec.values) {
      values[std::string(SchemeName(scheme))] = v;
    }
    placements.push_back({{"id", rec.id},
                          {"positions", PlacementToJson(setting, rec.placement)},
                          {"overlap", OverlapToJson(rec.overlap)},
                          {"values", std::move(values)}});
  }
  Json trace = Json::array();
  for (const TraceEntry& e : report.trace) {
    trace.push_back({{"placement", e.placement},
                     {"oracle", std::string(SchemeName(e.oracle))},
                     {"value", e.value},
                     {"incumbent", e.incumbent}});
  }
  return Json{
      {"m", report.m},
      {"positions", report.positions},
      {"mincover",
       {{"method", std::string(CoverMethodName(report.cover.method))},
        {"optimal", report.cover.optimal},
        {"placement", PlacementToJson(setting, report.cover.placement)}}},
      {"best", std::move(best)},
      {"placements_evaluated", report.placements_evaluated},
      {"exhausted", report.exhausted},
      {"timed_out", report.timed_out},
      {"placements", std::move(placements)},
      {"trace", std::move(trace)}};
}

Json ReportTimingsToJson(const ResolutionReport& report) {
  Json placements = Json::array();
  for (const PlacementRecord& rec : report.placements) {
    Json ms = Json::object();
    for (const auto& [scheme, v] : rec.wall_ms) {
      ms[std::string(SchemeName(scheme))] = v;
    }
    placements.push_back({{"id", rec.id}, {"oracle_ms", std::move(ms)}});
  }
  Json trace = Json::array();
  for (const TraceEntry& e : report.trace) trace.push_back(e.elapsed_ms);
  return Json{{"mincover_ms", report.mincover_ms},
              {"placements", std::move(placements)},
              {"trace_elapsed_ms", std::move(trace)}};
}

std::string TraceCsv(const ResolutionReport& report) {
  std::string out = "elapsed_ms,placement,oracle,value,incumbent\n";
  for (const TraceEntry& e : report.trace) {
    out += FormatCsvNumber(e.elapsed_ms) + "," + std::to_string(e.placement) +
           "," + std::string(SchemeName(e.oracle)) + "," +
           FormatCsvNumber(e.value) + "," + FormatCsvNumber(e.incumbent) + "\n";
  }
  return out;
}

}  // namespace alarmgame
