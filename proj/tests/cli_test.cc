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


#include "qxor/cli.h"

#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "qxor/io.h"
#include "qxor/report.h"
#include "test_util.h"

namespace qxor::cli {
namespace {

using qxor::testing::TempPath;

const std::string kGames = QXOR_DATA_DIR "/games/";

std::string WriteFile(const std::string& name, const std::string& body) {
  const std::string path = TempPath(name);
  std::ofstream(path) << body;
  return path;
}

std::string WriteStrategy(const std::string& name, const AnyStrategy& s) {
  const std::string path = TempPath(name);
  io::WriteJsonFile(path, io::StrategyToJson(s));
  return path;
}

TensorStrategy IdentityStrategy(int n) {
  CVector psi(1);
  psi(0) = 1.0;
  return TensorStrategy(n, 1, 1, CMatrix::Identity(n, n), CMatrix::Identity(n, n), psi);
}

TEST(CmdValidateTest, ChshPasses) {
  std::ostringstream out, err;
  const RunReport r = CmdValidate(kGames + "chsh.json", out, err);
  EXPECT_EQ(r.exit_status, kExitOk);
  EXPECT_NE(out.str().find("traceNorm 1\n"), std::string::npos) << out.str();
  EXPECT_NEAR(r.results["trace_norm"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(r.inputs_digest.size(), 16u);
}

TEST(CmdValidateTest, TraceNormAndSelfAdjointDiagnostics) {
  std::ostringstream out, err;
  const std::string big =
      WriteFile("cli_big.json", R"({"n": 1, "strict": true, "matrix": [[[2, 0]]]})");
  RunReport r = CmdValidate(big, out, err);
  EXPECT_EQ(r.exit_status, kExitValidation);
  EXPECT_NE(r.diagnostic.find("trace-norm"), std::string::npos) << r.diagnostic;

  const std::string skew = WriteFile(
      "cli_skew.json",
      R"({"n": 1, "strict": false, "matrix": [[[0, 0.5]]]})");
  r = CmdValidate(skew, out, err);
  EXPECT_EQ(r.exit_status, kExitValidation);
  EXPECT_NE(r.diagnostic.find("self-adjoint"), std::string::npos) << r.diagnostic;
  EXPECT_NE(err.str().find("self-adjoint"), std::string::npos);
}

TEST(CmdValidateTest, ParseAndIoErrors) {
  std::ostringstream out, err;
  const std::string broken = WriteFile("cli_broken.json", "{\n  \"n\": 2,\n  oops\n}\n");
  RunReport r = CmdValidate(broken, out, err);
  EXPECT_EQ(r.exit_status, kExitIo);
  EXPECT_NE(r.diagnostic.find(":3:"), std::string::npos) << r.diagnostic;
  r = CmdValidate(TempPath("cli_missing.json"), out, err);
  EXPECT_EQ(r.exit_status, kExitIo);
}

TEST(CmdBiasTest, PerfectGameIdentityStrategy) {
  std::ostringstream out, err;
  const std::string strat = WriteStrategy("cli_identity.json", IdentityStrategy(2));
  const RunReport r = CmdBias(kGames + "perfect_product.json", strat, out, err);
  ASSERT_EQ(r.exit_status, kExitOk) << r.diagnostic;
  EXPECT_NE(out.str().find("\nbias 1\np 1\n"), std::string::npos) << out.str();
  EXPECT_EQ(r.results["bias"].get<double>(), 1.0);
  EXPECT_EQ(r.results["p"].get<double>(), 1.0);
  EXPECT_LE(r.results["difference"].get<double>(), 1e-15);
}

TEST(CmdBiasTest, ChshIdentityStrategyAndMismatch) {
  std::ostringstream out, err;
  const std::string strat = WriteStrategy("cli_identity2.json", IdentityStrategy(2));
  RunReport r = CmdBias(kGames + "chsh.json", strat, out, err);
  EXPECT_NEAR(r.results["bias"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(r.results["p"].get<double>(), 0.75, 1e-15);

  const std::string three = WriteStrategy("cli_identity3.json", IdentityStrategy(3));
  r = CmdBias(kGames + "chsh.json", three, out, err);
  EXPECT_EQ(r.exit_status, kExitValidation);
  EXPECT_NE(r.diagnostic.find("size mismatch"), std::string::npos);
}

TEST(CmdOptimizeTest, ChshWritesTraceAndStrategy) {
  OptimizeOptions o;
  o.game_path = kGames + "chsh.json";
  o.seed = 7;
  o.trace_path = TempPath("cli_trace.csv");
  o.strategy_path = TempPath("cli_best.json");
  std::ostringstream out, err;
  const RunReport r = CmdOptimize(o, out, err);
  ASSERT_EQ(r.exit_status, kExitOk) << r.diagnostic;
  const double best = r.results["best_bias"].get<double>();
  EXPECT_GE(best, 0.70700);
  EXPECT_NE(out.str().find("bestBias 0.7071"), std::string::npos);
  EXPECT_EQ(r.config["restarts"].get<int>(), 50);
  EXPECT_EQ(r.config["sweeps"].get<int>(), 500);

  std::ifstream csv(o.trace_path);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "restart,sweep,stage,bias_re,bias_im");

  std::ostringstream bout, berr;
  const RunReport b = CmdBias(o.game_path, o.strategy_path, bout, berr);
  EXPECT_NEAR(b.results["bias"].get<double>(), best, 1e-10);
}

TEST(CmdOptimizeTest, PerfectGameAndLadder) {
  OptimizeOptions o;
  o.game_path = kGames + "perfect_product.json";
  o.dim_a = o.dim_b = 1;
  o.restarts = 5;
  std::ostringstream out, err;
  RunReport r = CmdOptimize(o, out, err);
  EXPECT_GE(r.results["best_bias"].get<double>(), 1.0 - 1e-8);

  o.dims = {1, 2, 4};
  std::ostringstream lout;
  r = CmdOptimize(o, lout, err);
  ASSERT_EQ(r.exit_status, kExitOk) << r.diagnostic;
  ASSERT_EQ(r.results["ladder"].size(), 3u);
  EXPECT_EQ(r.results["ladder"][2]["d"].get<int>(), 4);
}

TEST(CmdOptimizeTest, RejectsBadConfig) {
  OptimizeOptions o;
  o.game_path = kGames + "chsh.json";
  o.restarts = 0;
  std::ostringstream out, err;
  EXPECT_EQ(CmdOptimize(o, out, err).exit_status, kExitValidation);
}

TEST(CmdDilateTest, ObservableOutputIsObservable) {
  const std::string in = WriteStrategy("cli_rand.json", RandomTensorStrategy(2, 2, 2, std::uint64_t{5}));
  DilateOptions o{in, "observable", TempPath("cli_obs.json"), ""};
  std::ostringstream out, err;
  const RunReport r = CmdDilate(o, out, err);
  ASSERT_EQ(r.exit_status, kExitOk) << r.diagnostic;
  EXPECT_TRUE(r.results["checks"]["observable"].get<bool>());
  EXPECT_LE(r.results["transform_error"].get<double>(), 1e-11);
  const auto s = std::get<TensorStrategy>(io::ReadStrategyFile(o.out_path));
  EXPECT_TRUE(IsObservableStrategy(s));
}

TEST(CmdDilateTest, EmbedThenExtractRoundTrip) {
  const TensorStrategy s = RandomTensorStrategy(2, 2, 1, std::uint64_t{6});
  const std::string in = WriteStrategy("cli_src.json", s);
  std::ostringstream out, err;
  DilateOptions embed{in, "embed", TempPath("cli_embedded.json"), ""};
  RunReport r = CmdDilate(embed, out, err);
  ASSERT_EQ(r.exit_status, kExitOk) << r.diagnostic;
  EXPECT_LE(r.results["checks"]["corner_pattern_violation"].get<double>(), 1e-11);

  DilateOptions extract{embed.out_path, "extract", TempPath("cli_extracted.json"), ""};
  r = CmdDilate(extract, out, err);
  ASSERT_EQ(r.exit_status, kExitOk) << r.diagnostic;
  EXPECT_LE(r.results["transform_error"].get<double>(), 1e-10);
  const AnyStrategy back = io::ReadStrategyFile(extract.out_path);
  EXPECT_LE((CorrelationOf(back).x - CorrelationTensor(s).x).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(CmdDilateTest, ExtractOnNonEmbeddingFails) {
  const std::string in = WriteStrategy("cli_plain.json", RandomTensorStrategy(2, 2, 2, std::uint64_t{7}));
  DilateOptions o{in, "extract", "", ""};
  std::ostringstream out, err;
  const RunReport r = CmdDilate(o, out, err);
  EXPECT_EQ(r.exit_status, kExitValidation);
  EXPECT_EQ(r.diagnostic.rfind("embedding pattern:", 0), 0u) << r.diagnostic;
}

TEST(CmdDilateTest, SymmetrizeWithGameAndUnknownKind) {
  const std::string in = WriteStrategy("cli_sym.json", RandomTensorStrategy(2, 1, 2, std::uint64_t{8}));
  std::ostringstream out, err;
  DilateOptions o{in, "symmetrize", TempPath("cli_sym_out.json"), kGames + "chsh.json"};
  RunReport r = CmdDilate(o, out, err);
  ASSERT_EQ(r.exit_status, kExitOk) << r.diagnostic;
  EXPECT_TRUE(r.results["phase_adjusted"].get<bool>());
  o.kind = "teleport";
  r = CmdDilate(o, out, err);
  EXPECT_EQ(r.exit_status, kExitValidation);
}

TEST(CmdVerifyTest, SmokeRunPasses) {
  verify::VerifyOptions o;
  o.trials = 1;
  std::ostringstream out, err;
  const RunReport r = CmdVerify(o, out, err);
  EXPECT_EQ(r.exit_status, kExitOk) << out.str();
  EXPECT_NE(out.str().find("all properties passed"), std::string::npos);
  EXPECT_EQ(r.config["seed"].get<int>(), 42);
}

TEST(CommandDeterminismTest, SameInputsSameResults) {
  OptimizeOptions o;
  o.game_path = kGames + "chsh.json";
  o.restarts = 5;
  o.seed = 3;
  std::ostringstream out1, out2, err;
  RunReport a = CmdOptimize(o, out1, err);
  RunReport b = CmdOptimize(o, out2, err);
  a.results.erase("wall_seconds");
  b.results.erase("wall_seconds");
  EXPECT_EQ(a.results, b.results);
  EXPECT_EQ(a.inputs_digest, b.inputs_digest);
}

}  // namespace
}  // namespace qxor::cli
