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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qxor/cli.h"
#include "qxor/io.h"
#include "qxor/report.h"

int main(int argc, char** argv) {
  CLI::App app{"qxor: quantum XOR games, strategy biases, dilations and see-saw lower bounds"};
  app.require_subcommand(1);
  // Lets the global --report option appear after the subcommand as well.
  app.fallthrough();
  std::string report_path;
  app.add_option("--report", report_path, "Write the JSON run report to this file");

  std::string game_path;
  std::string strategy_path;

  auto* validate = app.add_subcommand("validate", "Check a game file");
  validate->add_option("game", game_path, "Game JSON")->required();

  auto* bias = app.add_subcommand("bias", "Evaluate a strategy's bias on a game");
  bias->add_option("game", game_path, "Game JSON")->required();
  bias->add_option("strategy", strategy_path, "Strategy JSON")->required();

  qxor::cli::OptimizeOptions opt;
  opt.threads = qxor::cli::DefaultThreads();
  int dim = 0;
  auto* optimize = app.add_subcommand("optimize", "See-saw lower bound on the entanglement bias");
  optimize->add_option("game", opt.game_path, "Game JSON")->required();
  optimize->add_option("--dim", dim, "Local dimension for both players");
  optimize->add_option("--dimA", opt.dim_a, "Alice's local dimension")->capture_default_str();
  optimize->add_option("--dimB", opt.dim_b, "Bob's local dimension")->capture_default_str();
  optimize->add_option("--dims", opt.dims, "Comma-separated dimension ladder")->delimiter(',');
  optimize->add_option("--restarts", opt.restarts)->capture_default_str();
  optimize->add_option("--sweeps", opt.sweeps)->capture_default_str();
  optimize->add_option("--tol", opt.tol)->capture_default_str();
  optimize->add_option("--seed", opt.seed)->capture_default_str();
  optimize->add_option("--trace", opt.trace_path, "CSV trace output");
  optimize->add_option("--strategy-out", opt.strategy_path, "Best strategy JSON output");

  qxor::cli::DilateOptions dil;
  auto* dilate = app.add_subcommand("dilate", "Apply a strategy transform");
  dilate->add_option("strategy", dil.strategy_path, "Strategy JSON")->required();
  dilate->add_option("kind", dil.kind, "observable|adjoint|symmetrize|embed|extract")
      ->required()
      ->check(CLI::IsMember({"observable", "adjoint", "symmetrize", "embed", "extract"}));
  dilate->add_option("-o,--out", dil.out_path, "Output strategy JSON");
  dilate->add_option("--game", dil.game_path, "Phase-adjust against this game (symmetrize)");

  qxor::verify::VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Run the randomised property suite");
  verify->add_option("--n", ver.n)->capture_default_str();
  verify->add_option("--dims", ver.dims, "Local dimensions")->delimiter(',');
  verify->add_option("--trials", ver.trials)->capture_default_str();
  verify->add_option("--seed", ver.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qxor::kExitIo;
  }

  if (dim > 0) {
    opt.dim_a = dim;
    opt.dim_b = dim;
  }

  qxor::RunReport report;
  if (*validate) {
    report = qxor::cli::CmdValidate(game_path, std::cout, std::cerr);
  } else if (*bias) {
    report = qxor::cli::CmdBias(game_path, strategy_path, std::cout, std::cerr);
  } else if (*optimize) {
    report = qxor::cli::CmdOptimize(opt, std::cout, std::cerr);
  } else if (*dilate) {
    report = qxor::cli::CmdDilate(dil, std::cout, std::cerr);
  } else {
    report = qxor::cli::CmdVerify(ver, std::cout, std::cerr);
  }

  if (!report_path.empty()) {
    try {
      qxor::io::WriteJsonFile(report_path, qxor::ToJson(report));
    } catch (const std::exception& e) {
      std::cerr << "qxor: " << e.what() << '\n';
      return qxor::kExitIo;
    }
  }
  return report.exit_status;
}
