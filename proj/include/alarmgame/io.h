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

#ifndef ALARMGAME_IO_H_
#define ALARMGAME_IO_H_

#include <string>
#include <string_view>

#include "alarmgame/mincover.h"
#include "alarmgame/model.h"
#include "alarmgame/oracles.h"
#include "alarmgame/pipeline.h"
#include "alarmgame/routes.h"
#include "json.hpp"

namespace alarmgame {

using Json = nlohmann::ordered_json;

// Instance documents:
//   {"vertices": ["a", ...], "edges": [["a", "b"], ...],
//    "targets": [{"id": "a", "value": 0.5, "deadline": 2}, ...],
//    "signals": [{"id": "s", "probs": {"a": 1.0, ...}}, ...]}
// Malformed documents raise Error(kParse) naming the offending key;
// validation failures keep their own codes.
Instance ParseInstance(const Json& doc);
Instance ParseInstanceText(std::string_view text);
Instance LoadInstance(const std::string& path);
Json InstanceToJson(const Instance& instance);

// 64-bit FNV-1a, lower-case hex.
std::string HashHex(std::string_view bytes);

std::string ReadFile(const std::string& path);
// Throws on I/O failure.
void WriteFile(const std::string& path, std::string_view contents);

Json PlacementToJson(const PatrollingSetting& setting,
                     const CoveringPlacement& placement);
Json RouteToJson(const PatrollingSetting& setting, const CoveringRoute& route);
Json RouteSetToJson(const PatrollingSetting& setting, const RouteSet& routes);
Json OverlapToJson(const OverlapMetrics& metrics);

// Strategies (route id -> probability, route ids "r<k>" within each
// resource's route set) and solve diagnostics. Wall-clock times are left out
// so that result files are reproducible.
Json SchemeEvaluationToJson(const Instance& instance,
                            const SchemeEvaluation& evaluation);

Json ReportToJson(const Instance& instance, const ResolutionReport& report);
// Wall-clock measurements of a run, kept apart from the result document.
Json ReportTimingsToJson(const ResolutionReport& report);
// Round-trip rendering ("%.17g") used for every CSV number.
std::string FormatCsvNumber(double x);

// elapsed_ms,placement,oracle,value,incumbent
std::string TraceCsv(const ResolutionReport& report);

}  // namespace alarmgame

#endif  // ALARMGAME_IO_H_
