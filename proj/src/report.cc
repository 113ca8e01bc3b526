// Copyright 2026 The qxor Authors
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

#include "qxor/report.h"

#include "qxor/errors.h"

namespace qxor {

nlohmann::json ToJson(const RunReport& report) {
  return nlohmann::json{{"command", report.command},
                        {"inputs_digest", report.inputs_digest},
                        {"config", report.config},
                        {"results", report.results},
                        {"exit_status", report.exit_status},
                        {"diagnostic", report.diagnostic}};
}

RunReport RunReportFromJson(const nlohmann::json& j) {
  try {
    RunReport report;
    report.command = j.at("command").get<std::string>();
    report.inputs_digest = j.at("inputs_digest").get<std::string>();
    report.config = j.at("config");
    report.results = j.at("results");
    report.exit_status = j.at("exit_status").get<int>();
    report.diagnostic = j.at("diagnostic").get<std::string>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("run report: ") + e.what());
  }
}

}  // namespace qxor
