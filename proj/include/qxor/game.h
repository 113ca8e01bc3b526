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

#ifndef QXOR_GAME_H_
#define QXOR_GAME_H_

#include <cstdint>
#include <vector>

#include "qxor/linalg.h"

namespace qxor {

// Tolerance for checks on user-supplied game data.
inline constexpr double kGameInputTol = 1e-8;

// One possible referee question: state phi in C^n (x) C^n, sent with
// probability p; the players must answer equal bits iff c == 0.
struct Outcome {
  CVector state;
  double p = 0.0;
  int c = 0;
};

struct OutcomeSpec {
  int n = 1;
  std::vector<Outcome> outcomes;
};

// A quantum XOR game of size n, identified with its self-adjoint matrix M on
// C^n (x) C^n. Strict games have ||M||_1 == 1, non-strict ones ||M||_1 <= 1.
// Instances only exist in validated form; see ValidateGame.
class QuantumXorGame {
 public:
  int n() const { return n_; }
  const CMatrix& matrix() const { return m_; }
  bool strict() const { return strict_; }

  // Game with matrix -M. Same size and strictness.
  QuantumXorGame Negated() const;

 private:
  friend QuantumXorGame ValidateGame(const CMatrix& m, int n, bool strict, double tol);
  QuantumXorGame(int n, CMatrix m, bool strict) : n_(n), m_(std::move(m)), strict_(strict) {}

  int n_;
  CMatrix m_;
  bool strict_;
};

// Checks self-adjointness and the trace-norm condition. The stored matrix is
// the Hermitian part of `m`.
QuantumXorGame ValidateGame(const CMatrix& m, int n, bool strict = true,
                            double tol = kGameInputTol);

// M = sum_i (-1)^{c_i} p_i phi_i phi_i^*. Fewer than n^2 outcomes are allowed;
// the missing basis states carry probability zero.
QuantumXorGame GameFromOutcomes(const OutcomeSpec& spec, double tol = kGameInputTol);

// Classical XOR game with question weights R (n x n, sum |R_st| = 1) embedded
// as M = sum_{s,t} R_st (e_s e_s^*) (x) (e_t e_t^*). With `normalize` the
// weights are rescaled to unit l1 norm first.
QuantumXorGame GameFromClassicalXor(const RMatrix& r, bool normalize = false);

// CHSH: R = 1/4 [[1, 1], [1, -1]].
QuantumXorGame ChshGame();

// Full orthonormal outcome list: columns of a Haar unitary, Dirichlet(1)
// probabilities and fair random bits.
OutcomeSpec RandomOutcomeSpec(int n, std::mt19937_64& rng);

// Random strict game of size n: a Haar-random eigenbasis with random signed
// weights normalised to unit trace norm.
QuantumXorGame RandomGame(int n, std::mt19937_64& rng);

}  // namespace qxor

#endif  // QXOR_GAME_H_
