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

// Strategies in the tensor-product and commuting models, the correlation
// matrices they generate, and bias evaluation.
//
// A player's unitary is stored as one big matrix in n x n blocks: Alice's U
// is (n*dA) x (n*dA) with blocks U_ij of size dA. In the tensor model the
// shared state lives in C^dA (x) C^dB with Alice's index leading.

#ifndef QXOR_STRATEGY_H_
#define QXOR_STRATEGY_H_

#include <cstdint>
#include <random>
#include <variant>

#include "qxor/game.h"
#include "qxor/linalg.h"

namespace qxor {

class TensorStrategy {
 public:
  // Validates shapes, unitarity of U and V and the norm of psi at `tol`.
  TensorStrategy(int n, int dim_a, int dim_b, CMatrix u, CMatrix v, CVector psi,
                 double tol = kEntrywiseTol);

  int n() const { return n_; }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  const CMatrix& u() const { return u_; }
  const CMatrix& v() const { return v_; }
  const CVector& psi() const { return psi_; }

  CMatrix UBlock(int i, int j) const { return linalg::Block(u_, dim_a_, i, j); }
  CMatrix VBlock(int k, int l) const { return linalg::Block(v_, dim_b_, k, l); }

 private:
  int n_;
  int dim_a_;
  int dim_b_;
  CMatrix u_;
  CMatrix v_;
  CVector psi_;
};

// Both players act on a common C^d. The constructor checks shapes,
// unitarity and normalisation but not commutation; CheckCommuting measures it
// and CorrelationCommuting enforces it.
class CommutingStrategy {
 public:
  CommutingStrategy(int n, int dim, CMatrix u, CMatrix v, CVector psi,
                    double tol = kEntrywiseTol);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const CMatrix& u() const { return u_; }
  const CMatrix& v() const { return v_; }
  const CVector& psi() const { return psi_; }

  CMatrix UBlock(int i, int j) const { return linalg::Block(u_, dim_, i, j); }
  CMatrix VBlock(int k, int l) const { return linalg::Block(v_, dim_, k, l); }

 private:
  int n_;
  int dim_;
  CMatrix u_;
  CMatrix v_;
  CVector psi_;
};

using AnyStrategy = std::variant<TensorStrategy, CommutingStrategy>;

// n^2 x n^2 matrix of the values <U_ij V_kl psi, psi>, laid out by
// linalg::TensorLayout.
struct Correlation {
  int n = 1;
  CMatrix x;
};

Correlation CorrelationTensor(const TensorStrategy& s);

// Throws ModelError when the blocks fail to commute beyond `tol`.
Correlation CorrelationCommuting(const CommutingStrategy& s, double tol = kEntrywiseTol);

Correlation CorrelationOf(const AnyStrategy& s);

// max over i,j,k,l of max |U_ij V_kl - V_kl U_ij|.
double CheckCommuting(const CommutingStrategy& s);

// Tr(M X). Complex in general.
Complex BiasTrace(const QuantumXorGame& g, const Correlation& x);

// <Tr_game[(U [x] V)(M (x) I)] psi, psi>, evaluated literally: builds the
// n^2-block operator with ((i,k),(j,l)) block U_ij (x) V_kl and the block-scalar
// inflation of M, multiplies them and traces out the game register.
Complex BiasDirect(const QuantumXorGame& g, const TensorStrategy& s);

// (1 + bias) / 2.
double SuccessProbability(double bias);

TensorStrategy RandomTensorStrategy(int n, int dim_a, int dim_b, std::uint64_t seed);
TensorStrategy RandomTensorStrategy(int n, int dim_a, int dim_b, std::mt19937_64& rng);

// Embeds a tensor strategy into the commuting model on C^{dA*dB}:
// U_ij -> U_ij (x) I, V_kl -> I (x) V_kl. The correlation is unchanged.
CommutingStrategy CommutingFromTensor(const TensorStrategy& s);

// Random commuting strategy: a random tensor strategy moved into the
// commuting model and conjugated by a Haar-random unitary of C^{dA*dB}, which
// hides the product structure.
CommutingStrategy RandomCommutingStrategy(int n, int dim_a, int dim_b, std::mt19937_64& rng);

// U -> lambda U, so X -> lambda X. Requires |lambda| = 1.
TensorStrategy ScaleByPhase(const TensorStrategy& s, Complex lambda);
CommutingStrategy ScaleByPhase(const CommutingStrategy& s, Complex lambda);

// Phase making `bias` real and nonnegative: conj(bias)/|bias|, or 1 at 0.
Complex PhaseFor(Complex bias);

TensorStrategy PhaseAdjust(const QuantumXorGame& g, const TensorStrategy& s);
CommutingStrategy PhaseAdjust(const QuantumXorGame& g, const CommutingStrategy& s);

// Replaces U and V by their adjoints; the correlation becomes X^*.
TensorStrategy AdjointStrategy(const TensorStrategy& s);
CommutingStrategy AdjointStrategy(const CommutingStrategy& s);

// Direct-sum realisation of lambda X1 + (1 - lambda) X2.
TensorStrategy ConvexCombine(const TensorStrategy& s1, const TensorStrategy& s2, double lambda);
CommutingStrategy ConvexCombine(const CommutingStrategy& s1, const CommutingStrategy& s2,
                                double lambda);

// U = U^* and V = V^* within tol.
bool IsObservableStrategy(const TensorStrategy& s, double tol = kEntrywiseTol);
bool IsObservableStrategy(const CommutingStrategy& s, double tol = kEntrywiseTol);

}  // namespace qxor

#endif  // QXOR_STRATEGY_H_
