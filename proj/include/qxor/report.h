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

#ifndef QXOR_REPORT_H_
#define QXOR_REPORT_H_

#include <string>

#include "json.hpp"

namespace qxor {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIo = 2,
  kExitNumerical = 3,
};

// Machine-readable record of one CLI invocation.
struct RunReport {
  std::string command;
  // FNV-1a digest over the input files, in argument order.
  std::string inputs_digest;
  // Effective configuration with all defaults resolved.
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  int exit_status = kExitOk;
  std::string diagnostic;
};

nlohmann::json ToJson(const RunReport& report);
RunReport RunReportFromJson(const nlohmann::json& j);

}  // namespace qxor

#endif  // QXOR_REPORT_H_
