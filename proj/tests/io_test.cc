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


#include "qxor/io.h"

#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "qxor/errors.h"
#include "qxor/optimize.h"
#include "qxor/report.h"
#include "test_util.h"

namespace qxor::io {
namespace {

using qxor::testing::MaxDiff;
using qxor::testing::TempPath;

TEST(JsonTest, ComplexAndMatrixRoundTrip) {
  EXPECT_EQ(ComplexToJson(Complex(1.5, -2.0)), Json::parse("[1.5, -2.0]"));
  EXPECT_EQ(ComplexFromJson(Json::parse("[0.25, 3]"), "x"), Complex(0.25, 3.0));
  EXPECT_THROW(ComplexFromJson(Json::parse("[1]"), "x"), ParseError);
  EXPECT_THROW(ComplexFromJson(Json::parse("\"1\""), "x"), ParseError);

  std::mt19937_64 rng(1);
  const CMatrix m = linalg::GinibreMatrix(3, 3, rng);
  EXPECT_EQ(MatrixFromJson(MatrixToJson(m), "m"), m);
  EXPECT_THROW(MatrixFromJson(Json::parse("[[[1,0]],[[1,0],[0,0]]]"), "m"), ParseError);
  const CVector v = linalg::RandomUnitVector(5, rng);
  EXPECT_EQ(VectorFromJson(VectorToJson(v), "v"), v);
}

TEST(JsonTest, GameFromOutcomesAndMatrix) {
  const Json outcomes = Json::parse(R"({"n": 1, "strict": true,
      "outcomes": [{"state": [[1, 0]], "p": 1.0, "c": 1}]})");
  EXPECT_EQ(GameFromJson(outcomes).matrix()(0, 0), Complex(-1.0));

  const Json matrix = Json::parse(R"({"n": 1, "matrix": [[[0.5, 0]]], "strict": false})");
  const QuantumXorGame g = GameFromJson(matrix);
  EXPECT_FALSE(g.strict());
  EXPECT_EQ(g.matrix()(0, 0), Complex(0.5));

  const QuantumXorGame back = GameFromJson(GameToJson(ChshGame()));
  EXPECT_LE(MaxDiff(back.matrix(), ChshGame().matrix()), 0.0);
}

TEST(JsonTest, GameNeedsExactlyOneForm) {
  EXPECT_THROW(GameFromJson(Json::parse(R"({"n": 1})")), ParseError);
  EXPECT_THROW(GameFromJson(Json::parse(
                   R"({"n": 1, "matrix": [[[1,0]]], "outcomes": []})")),
               ParseError);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"matrix": [[[1,0]]]})")), ParseError);
  EXPECT_THROW(GameFromJson(Json::parse(R"({"n": 1, "strict": 1, "matrix": [[[1,0]]]})")),
               ParseError);
}

TEST(JsonTest, OutcomeSpecRoundTrip) {
  std::mt19937_64 rng(2);
  const OutcomeSpec spec = RandomOutcomeSpec(2, rng);
  const QuantumXorGame g = GameFromJson(OutcomeSpecToJson(spec));
  EXPECT_LE(MaxDiff(g.matrix(), GameFromOutcomes(spec).matrix()), 0.0);
}

TEST(JsonTest, StrategyRoundTrip) {
  const TensorStrategy t = RandomTensorStrategy(2, 2, 3, std::uint64_t{3});
  const auto back = std::get<TensorStrategy>(StrategyFromJson(StrategyToJson(t)));
  EXPECT_EQ(back.dim_b(), 3);
  EXPECT_EQ(back.u(), t.u());
  EXPECT_EQ(back.v(), t.v());
  EXPECT_EQ(back.psi(), t.psi());

  std::mt19937_64 rng(4);
  const CommutingStrategy c = RandomCommutingStrategy(2, 2, 1, rng);
  const auto cback = std::get<CommutingStrategy>(StrategyFromJson(StrategyToJson(c)));
  EXPECT_EQ(cback.dim(), 2);
  EXPECT_EQ(cback.u(), c.u());

  Json bad = StrategyToJson(t);
  bad["model"] = "classical";
  EXPECT_THROW(StrategyFromJson(bad), ParseError);
  bad = StrategyToJson(t);
  bad.erase("psi");
  EXPECT_THROW(StrategyFromJson(bad), ParseError);
}

TEST(JsonTest, ParseErrorReportsLineAndContext) {
  const std::string text = "{\n  \"n\": 2,\n  \"strict\": tru\n}\n";
  try {
    ParseJsonText(text, "game.json");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("game.json:3:"), std::string::npos) << msg;
    EXPECT_NE(msg.find("\"strict\": tru"), std::string::npos) << msg;
  }
}

TEST(FileTest, WriteReadAndMissing) {
  const std::string path = TempPath("io_test_game.json");
  WriteJsonFile(path, GameToJson(ChshGame()));
  EXPECT_LE(MaxDiff(ReadGameFile(path).matrix(), ChshGame().matrix()), 0.0);
  EXPECT_THROW(ReadTextFile(TempPath("does_not_exist.json")), ParseError);
}

TEST(DigestTest, KnownFnvValues) {
  EXPECT_EQ(Digest(""), "cbf29ce484222325");
  EXPECT_EQ(Digest("a"), "af63dc4c8601ec8c");
}

TEST(TraceCsvTest, HeaderRecordsAndSummary) {
  optimize::SeesawConfig config;
  config.dim_a = config.dim_b = 1;
  config.restarts = 2;
  config.seed = 5;
  const optimize::SeesawResult r = optimize::Seesaw(ChshGame(), config);
  std::ostringstream out;
  WriteTraceCsv(out, r);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "restart,sweep,stage,bias_re,bias_im");
  std::size_t records = 0;
  std::string last;
  while (std::getline(in, line)) {
    last = line;
    ++records;
  }
  std::size_t expected = 1;
  for (const auto& t : r.traces) expected += t.records.size();
  EXPECT_EQ(records, expected);
  std::ostringstream summary;
  summary.precision(17);
  summary << r.best_restart << ',' << r.traces[r.best_restart].sweeps << ",summary,"
          << r.traces[r.best_restart].final_value.real() << ','
          << r.traces[r.best_restart].final_value.imag();
  EXPECT_EQ(last, summary.str());
  EXPECT_NE(out.str().find(",alice,"), std::string::npos);
  EXPECT_NE(out.str().find(",state,"), std::string::npos);
}

TEST(RunReportTest, JsonRoundTrip) {
  RunReport report;
  report.command = "optimize";
  report.inputs_digest = Digest("abc");
  report.config = Json{{"restarts", 50}, {"tol", 1e-10}, {"dims", {1, 2}}};
  report.results = Json{{"best_bias", 0.70710678118654757}};
  report.exit_status = kExitValidation;
  report.diagnostic = "trace-norm 2 exceeds 1";
  const RunReport back = RunReportFromJson(ToJson(report));
  EXPECT_EQ(back.command, report.command);
  EXPECT_EQ(back.inputs_digest, report.inputs_digest);
  EXPECT_EQ(back.config, report.config);
  EXPECT_EQ(back.results, report.results);
  EXPECT_EQ(back.exit_status, report.exit_status);
  EXPECT_EQ(back.diagnostic, report.diagnostic);
  EXPECT_EQ(ToJson(back), ToJson(report));
  EXPECT_EQ(ToJson(RunReportFromJson(Json::parse(ToJson(report).dump()))), ToJson(report));
}

}  // namespace
}  // namespace qxor::io
