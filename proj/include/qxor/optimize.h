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

// See-saw maximisation of Re Tr(M X) over finite-dimensional tensor
// strategies. Each stage maximises the objective exactly in one component
// with the other two fixed: Alice's and Bob's unitaries through a polar
// factor, the shared state through a top eigenvector.

#ifndef QXOR_OPTIMIZE_H_
#define QXOR_OPTIMIZE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qxor/game.h"
#include "qxor/strategy.h"

namespace qxor::optimize {

enum class Player { kAlice, kBob };
enum class Stage { kAlice, kBob, kState };

const char* StageName(Stage stage);

struct SeesawConfig {
  int dim_a = 2;
  int dim_b = 2;
  int restarts = 50;
  int max_sweeps = 500;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  // Worker threads for independent restarts; 0 means hardware concurrency.
  // Results do not depend on this value.
  int threads = 1;

  // Throws ValidationError on non-positive counts or tolerance.
  void Validate() const;
};

struct SweepRecord {
  int restart = 0;
  int sweep = 0;
  Stage stage = Stage::kAlice;
  Complex bias;
};

struct RestartTrace {
  int restart = 0;
  std::vector<SweepRecord> records;
  int sweeps = 0;
  bool converged = false;
  // Bias of the phase-adjusted final strategy; final_bias is its real part.
  Complex final_value;
  double final_bias = 0.0;
};

struct SeesawResult {
  double best_bias = 0.0;
  int best_restart = 0;
  TensorStrategy best_strategy;
  std::vector<RestartTrace> traces;
  double wall_seconds = 0.0;
};

// Matrix A with Tr(M X(W)) = Tr(W A) for every unitary W of the free player,
// the other player's unitary and the state held fixed.
CMatrix AssembleUpdateMatrix(const QuantumXorGame& g, Player free_side, const TensorStrategy& s);

// K = Tr_game[(U [x] V)(M (x) I)], so that the bias is <K psi, psi>.
CMatrix StateOperator(const QuantumXorGame& g, const TensorStrategy& s);

// Replaces one player's unitary by the polar factor of its update matrix.
TensorStrategy UpdatePlayer(const QuantumXorGame& g, const TensorStrategy& s, Player side);

// Replaces psi by a top eigenvector of (K + K^*)/2. A psi that already attains
// the top eigenvalue is kept; otherwise ties go to the lowest-index
// eigenvector of the top eigenspace.
TensorStrategy UpdateState(const QuantumXorGame& g, const TensorStrategy& s);

// Seed of the RNG stream used by restart `restart`.
std::uint64_t RestartSeed(std::uint64_t seed, int restart);

// Runs config.restarts independent see-saw descents from random strategies.
// best_strategy is phase-adjusted, so its bias equals best_bias.
SeesawResult Seesaw(const QuantumXorGame& g, const SeesawConfig& config);

struct LadderRow {
  int dim = 1;
  double best_bias = 0.0;
  // Set when this dimension scored below a smaller one (under-restarting).
  bool below_previous = false;
};

// Seesaw at dA = dB = d for each listed d (non-empty, strictly increasing).
std::vector<LadderRow> DimensionLadder(const QuantumXorGame& g, const std::vector<int>& dims,
                                       const SeesawConfig& config);

// True iff Re(bias) never drops by more than `slack` along the trace.
bool IsMonotone(const RestartTrace& trace, double slack = 1e-12);

}  // namespace qxor::optimize

#endif  // QXOR_OPTIMIZE_H_
