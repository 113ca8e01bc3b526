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

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qxor/errors.h"

namespace qxor::io {
namespace {

const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key, const std::string& where) {
  const Json& v = Field(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

double NumberField(const Json& j, const char* key, const std::string& where) {
  const Json& v = Field(j, key, where);
  if (!v.is_number()) throw ParseError(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

bool StrictField(const Json& j) {
  if (!j.contains("strict")) return true;
  if (!j.at("strict").is_boolean()) throw ParseError("game: \"strict\" must be a boolean");
  return j.at("strict").get<bool>();
}

}  // namespace

Json ComplexToJson(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex ComplexFromJson(const Json& j, const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": complex scalars must be [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json MatrixToJson(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(ComplexToJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix MatrixFromJson(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError(where + ": expected a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError(where + ": row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = ComplexFromJson(j[r][c], where);
    }
  }
  return m;
}

Json VectorToJson(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(ComplexToJson(v(i)));
  return out;
}

CVector VectorFromJson(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = ComplexFromJson(j[i], where);
  return v;
}

QuantumXorGame GameFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("game: expected a JSON object");
  const int n = IntField(j, "n", "game");
  if (n < 1) throw ParseError("game: \"n\" must be >= 1");
  const bool strict = StrictField(j);
  const bool has_outcomes = j.contains("outcomes");
  const bool has_matrix = j.contains("matrix");
  if (has_outcomes == has_matrix) {
    throw ParseError("game: exactly one of \"outcomes\" and \"matrix\" must be present");
  }
  if (has_matrix) {
    return ValidateGame(MatrixFromJson(j.at("matrix"), "game.matrix"), n, strict);
  }
  const Json& list = j.at("outcomes");
  if (!list.is_array()) throw ParseError("game: \"outcomes\" must be an array");
  OutcomeSpec spec;
  spec.n = n;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "game.outcomes[" + std::to_string(i) + "]";
    Outcome o;
    o.state = VectorFromJson(Field(list[i], "state", where), where + ".state");
    o.p = NumberField(list[i], "p", where);
    o.c = IntField(list[i], "c", where);
    spec.outcomes.push_back(std::move(o));
  }
  const QuantumXorGame g = GameFromOutcomes(spec);
  return strict ? g : ValidateGame(g.matrix(), n, false);
}

Json GameToJson(const QuantumXorGame& g) {
  return Json{{"n", g.n()}, {"strict", g.strict()}, {"matrix", MatrixToJson(g.matrix())}};
}

Json OutcomeSpecToJson(const OutcomeSpec& spec, bool strict) {
  Json outcomes = Json::array();
  for (const Outcome& o : spec.outcomes) {
    outcomes.push_back(Json{{"state", VectorToJson(o.state)}, {"p", o.p}, {"c", o.c}});
  }
  return Json{{"n", spec.n}, {"strict", strict}, {"outcomes", std::move(outcomes)}};
}

AnyStrategy StrategyFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("strategy: expected a JSON object");
  const Json& model = Field(j, "model", "strategy");
  if (!model.is_string()) throw ParseError("strategy: \"model\" must be a string");
  const int n = IntField(j, "n", "strategy");
  CMatrix u = MatrixFromJson(Field(j, "U", "strategy"), "strategy.U");
  CMatrix v = MatrixFromJson(Field(j, "V", "strategy"), "strategy.V");
  CVector psi = VectorFromJson(Field(j, "psi", "strategy"), "strategy.psi");
  const std::string kind = model.get<std::string>();
  if (kind == "tensor") {
    return TensorStrategy(n, IntField(j, "dA", "strategy"), IntField(j, "dB", "strategy"),
                          std::move(u), std::move(v), std::move(psi));
  }
  if (kind == "commuting") {
    return CommutingStrategy(n, IntField(j, "d", "strategy"), std::move(u), std::move(v),
                             std::move(psi));
  }
  throw ParseError("strategy: unknown model \"" + kind + "\"");
}

Json StrategyToJson(const TensorStrategy& s) {
  return Json{{"model", "tensor"},          {"n", s.n()},
              {"dA", s.dim_a()},            {"dB", s.dim_b()},
              {"U", MatrixToJson(s.u())},   {"V", MatrixToJson(s.v())},
              {"psi", VectorToJson(s.psi())}};
}

Json StrategyToJson(const CommutingStrategy& s) {
  return Json{{"model", "commuting"},     {"n", s.n()},
              {"d", s.dim()},             {"U", MatrixToJson(s.u())},
              {"V", MatrixToJson(s.v())}, {"psi", VectorToJson(s.psi())}};
}

Json StrategyToJson(const AnyStrategy& s) {
  return std::visit([](const auto& strat) { return StrategyToJson(strat); }, s);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json ParseJsonText(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t line_start = 0;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    const std::size_t line_end = text.find('\n', line_start);
    const std::string_view context =
        text.substr(line_start, line_end == std::string_view::npos ? text.size() - line_start
                                                                   : line_end - line_start);
    std::ostringstream msg;
    msg << source << ":" << line << ":" << (stop - line_start + 1) << ": JSON parse error\n  "
        << context;
    throw ParseError(msg.str());
  }
}

Json ReadJsonFile(const std::string& path) { return ParseJsonText(ReadTextFile(path), path); }

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("write failed for " + path);
}

QuantumXorGame ReadGameFile(const std::string& path) { return GameFromJson(ReadJsonFile(path)); }

AnyStrategy ReadStrategyFile(const std::string& path) {
  return StrategyFromJson(ReadJsonFile(path));
}

void WriteTraceCsv(std::ostream& out, const optimize::SeesawResult& result) {
  const auto old_precision = out.precision(17);
  out << "restart,sweep,stage,bias_re,bias_im\n";
  for (const optimize::RestartTrace& trace : result.traces) {
    for (const optimize::SweepRecord& rec : trace.records) {
      out << rec.restart << ',' << rec.sweep << ',' << optimize::StageName(rec.stage) << ','
          << rec.bias.real() << ',' << rec.bias.imag() << '\n';
    }
  }
  const optimize::RestartTrace& best = result.traces[result.best_restart];
  out << result.best_restart << ',' << best.sweeps << ",summary," << best.final_value.real()
      << ',' << best.final_value.imag() << '\n';
  out.precision(old_precision);
}

std::string Digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

}  // namespace qxor::io
