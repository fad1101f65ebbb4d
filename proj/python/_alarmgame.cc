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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "alarmgame/error.h"
#include "alarmgame/io.h"
#include "alarmgame/mincover.h"
#include "alarmgame/oracles.h"
#include "alarmgame/pipeline.h"
#include "alarmgame/random.h"
#include "alarmgame/routes.h"

namespace py = pybind11;

namespace alarmgame {
namespace {

std::chrono::milliseconds Seconds(double s) {
  return std::chrono::milliseconds(static_cast<long long>(s * 1000.0));
}

FcMode FcModeFrom(const std::string& name) {
  if (name == "exact") return FcMode::kExact;
  if (name == "heuristic") return FcMode::kHeuristic;
  throw Error(ErrorCode::kInvalidArgument, "unknown FC mode '" + name + "'");
}

CoveringPlacement PlacementFrom(const Instance& instance,
                                const DistanceMatrix& dist,
                                const std::vector<std::string>& ids) {
  CoveringPlacement placement;
  for (const std::string& id : ids) {
    placement.positions.push_back(instance.setting.VertexIndex(id));
  }
  std::sort(placement.positions.begin(), placement.positions.end());
  if (placement.positions.empty() ||
      !IsCovering(ToSetCover(instance.setting, dist), placement.positions)) {
    throw Error(ErrorCode::kInvalidArgument,
                "placement does not cover every target");
  }
  return placement;
}

std::string Generate(int n_targets, uint64_t seed, double mean_degree,
                     int deadline) {
  GeneratorParams params;
  params.n_targets = n_targets;
  params.seed = seed;
  params.mean_degree = mean_degree;
  params.deadline = deadline;
  return InstanceToJson(GenerateInstance(params)).dump();
}

std::string Validate(const std::string& text) {
  return InstanceToJson(ParseInstanceText(text)).dump();
}

std::string RunMinCover(const std::string& text, const std::string& method,
                        double budget_s) {
  const Instance instance = ParseInstanceText(text);
  const DistanceMatrix dist = AllPairsDistances(instance.setting);
  const MinCoverResult r = MinCover(instance.setting, dist,
                                    ParseCoverMethod(method), Seconds(budget_s));
  Json out = {
      {"method", std::string(CoverMethodName(r.method))},
      {"optimal", r.optimal},
      {"size", r.placement.size()},
      {"placement", PlacementToJson(instance.setting, r.placement)},
      {"overlap",
       OverlapToJson(ComputeOverlap(r.placement, instance.setting, dist))}};
  return out.dump();
}

std::string RunRoutes(const std::string& text, const std::string& start,
                      const std::string& signal, int exact_limit,
                      std::size_t beam_width) {
  const Instance instance = ParseInstanceText(text);
  const DistanceMatrix dist = AllPairsDistances(instance.setting);
  RouteOptions options;
  options.exact_limit = exact_limit;
  options.beam_width = beam_width;
  const int s = instance.alarm.SignalIndex(signal);
  const RouteSet routes =
      CoveringRoutes(instance.setting, dist, instance.setting.VertexIndex(start),
                     instance.alarm.SignalSupport(s), options);
  return RouteSetToJson(instance.setting, routes).dump();
}

std::string RunSro(const std::string& text,
                   const std::vector<std::string>& placement_ids,
                   const std::string& oracle, const std::string& fc_mode,
                   int pc_restarts, uint64_t seed, int resources_per_position) {
  const Instance instance = ParseInstanceText(text);
  const DistanceMatrix dist = AllPairsDistances(instance.setting);
  const CoveringPlacement placement =
      PlacementFrom(instance, dist, placement_ids);
  const Scheme scheme = ParseScheme(oracle);
  OracleConfig config;
  config.fc = scheme == Scheme::kFull;
  config.pc = scheme == Scheme::kPartial;
  config.nc = scheme == Scheme::kNone;
  config.fc_mode = FcModeFrom(fc_mode);
  config.pc_restarts = pc_restarts;
  config.seed = DeriveSeed(seed, "oracles");
  config.resources_per_position = resources_per_position;
  RouteCache routes(instance.setting, dist, instance.alarm, RouteOptions{});
  const std::vector<SchemeEvaluation> evals =
      EvaluatePlacement(instance, dist, placement, config, routes);
  Json out = SchemeEvaluationToJson(instance, evals.front());
  out["placement"] = PlacementToJson(instance.setting, placement);
  return out.dump();
}

std::string RunResolve(const std::string& text,
                       const std::vector<std::string>& oracles,
                       double budget_s, uint64_t seed, int max_placements,
                       int workers, const std::string& method) {
  const Instance instance = ParseInstanceText(text);
  ResolutionConfig config;
  config.time_budget = Seconds(budget_s);
  config.oracles.fc = config.oracles.pc = config.oracles.nc = false;
  for (const std::string& name : oracles) {
    switch (ParseScheme(name)) {
      case Scheme::kFull: config.oracles.fc = true; break;
      case Scheme::kPartial: config.oracles.pc = true; break;
      case Scheme::kNone: config.oracles.nc = true; break;
    }
  }
  config.seed = seed;
  config.max_placements = max_placements;
  config.workers = workers;
  config.cover_method = ParseCoverMethod(method);
  ResolutionReport report;
  {
    py::gil_scoped_release release;
    report = Resolve(instance, config);
  }
  return ReportToJson(instance, report).dump();
}

}  // namespace
}  // namespace alarmgame

PYBIND11_MODULE(_alarmgame, m) {
  using namespace alarmgame;
  m.doc() = "Native core of the alarmgame package; results are JSON text.";
  py::register_exception<Error>(m, "AlarmGameError", PyExc_ValueError);
  m.def("generate", &Generate, py::arg("n_targets"), py::arg("seed"),
        py::arg("mean_degree"), py::arg("deadline"));
  m.def("validate", &Validate, py::arg("instance"));
  m.def("mincover", &RunMinCover, py::arg("instance"), py::arg("method"),
        py::arg("budget_s"));
  m.def("routes", &RunRoutes, py::arg("instance"), py::arg("start"),
        py::arg("signal"), py::arg("exact_limit"), py::arg("beam_width"));
  m.def("sro", &RunSro, py::arg("instance"), py::arg("placement"),
        py::arg("oracle"), py::arg("fc_mode"), py::arg("pc_restarts"),
        py::arg("seed"), py::arg("resources_per_position"));
  m.def("resolve", &RunResolve, py::arg("instance"), py::arg("oracles"),
        py::arg("budget_s"), py::arg("seed"), py::arg("max_placements"),
        py::arg("workers"), py::arg("method"));
  m.attr("__version__") = ALARMGAME_VERSION;
}
