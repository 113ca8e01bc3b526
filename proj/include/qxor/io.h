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

// File formats.
//
// Complex scalars are [re, im] pairs; matrices are row-major arrays of rows.
//
// Game:      {"n": int, "strict": bool, "outcomes": [{"state": [...], "p": x, "c": 0|1}, ...]}
//        or  {"n": int, "strict": bool, "matrix": [[...], ...]}   (exactly one of the two)
// Strategy:  {"model": "tensor", "n", "dA", "dB", "U", "V", "psi"}
//        or  {"model": "commuting", "n", "d", "U", "V", "psi"}
// Trace CSV: restart,sweep,stage,bias_re,bias_im  followed by one summary row
//            <best restart>,<its sweep count>,summary,<best bias>,<imag part>.

#ifndef QXOR_IO_H_
#define QXOR_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qxor/game.h"
#include "qxor/optimize.h"
#include "qxor/strategy.h"

namespace qxor::io {

using Json = nlohmann::json;

Json ComplexToJson(Complex z);
Complex ComplexFromJson(const Json& j, const std::string& where);
Json MatrixToJson(const CMatrix& m);
CMatrix MatrixFromJson(const Json& j, const std::string& where);
Json VectorToJson(const CVector& v);
CVector VectorFromJson(const Json& j, const std::string& where);

// Structural problems raise ParseError; invariant violations raise
// ValidationError (via ValidateGame / GameFromOutcomes).
QuantumXorGame GameFromJson(const Json& j);
Json GameToJson(const QuantumXorGame& g);
Json OutcomeSpecToJson(const OutcomeSpec& spec, bool strict = true);

AnyStrategy StrategyFromJson(const Json& j);
Json StrategyToJson(const TensorStrategy& s);
Json StrategyToJson(const CommutingStrategy& s);
Json StrategyToJson(const AnyStrategy& s);

// Parse failures are reported with line and column.
Json ReadJsonFile(const std::string& path);
Json ParseJsonText(std::string_view text, const std::string& source);
void WriteJsonFile(const std::string& path, const Json& j);
std::string ReadTextFile(const std::string& path);

QuantumXorGame ReadGameFile(const std::string& path);
AnyStrategy ReadStrategyFile(const std::string& path);

void WriteTraceCsv(std::ostream& out, const optimize::SeesawResult& result);

// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string Digest(std::string_view bytes);

}  // namespace qxor::io

#endif  // QXOR_IO_H_
