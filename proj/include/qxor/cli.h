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

// Subcommand implementations behind the `qxor` executable. Each command
// writes a human summary to `out`, diagnostics to `err`, and returns a
// RunReport whose exit_status is the process exit code.

#ifndef QXOR_CLI_H_
#define QXOR_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qxor/report.h"
#include "qxor/verify.h"

namespace qxor::cli {

RunReport CmdValidate(const std::string& game_path, std::ostream& out, std::ostream& err);

RunReport CmdBias(const std::string& game_path, const std::string& strategy_path,
                  std::ostream& out, std::ostream& err);

struct OptimizeOptions {
  std::string game_path;
  int dim_a = 2;
  int dim_b = 2;
  // Non-empty: run a dimension ladder instead of a single see-saw.
  std::vector<int> dims;
  int restarts = 50;
  int sweeps = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string trace_path;
  std::string strategy_path;
};

RunReport CmdOptimize(const OptimizeOptions& options, std::ostream& out, std::ostream& err);

struct DilateOptions {
  std::string strategy_path;
  // observable | adjoint | symmetrize | embed | extract
  std::string kind;
  std::string out_path;
  // Optional; with symmetrize, phase-adjust against this game first.
  std::string game_path;
};

RunReport CmdDilate(const DilateOptions& options, std::ostream& out, std::ostream& err);

RunReport CmdVerify(const verify::VerifyOptions& options, std::ostream& out, std::ostream& err);

// Worker threads for see-saw restarts: hardware concurrency, capped by the
// QXOR_THREADS environment variable when it holds a positive integer.
int DefaultThreads();

}  // namespace qxor::cli

#endif  // QXOR_CLI_H_
