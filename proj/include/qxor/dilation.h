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

// Strategy transforms that realise the constructive steps relating unitary
// correlations, observables and the 2n corner embedding.
//
// Local space doubling convention: whenever a construction replaces a local
// space H by H (+) H (or four copies), the new copy index is the OUTER factor
// of that local space, i.e. H (+) H = C^2 (x) H, and within a tensor strategy
// Alice's enlarged space stays the leading factor of the shared state. So a
// doubled tensor state has index ((sA*dA + a) * 2dB + sB*dB + b).

#ifndef QXOR_DILATION_H_
#define QXOR_DILATION_H_

#include <functional>

#include "qxor/linalg.h"
#include "qxor/strategy.h"

namespace qxor::dilation {

// Max-entry tolerance for accepting a correlation as a corner embedding.
inline constexpr double kCornerTol = 1e-8;

// Defects 1 - sigma^2 at or below this are treated as exactly zero by
// HalmosDilation.
inline constexpr double kDefectFloor = 1e-12;

// Signature of a unitary dilation of an n x n block contraction with blocks of
// size block_dim. Must return an n x n block unitary with blocks of size
// 2*block_dim whose top-left sub-blocks are the input blocks.
using ContractionDilator = std::function<CMatrix(const CMatrix& s, int n, int block_dim)>;

// Observable strategy with dims (2dA, 2dB) and correlation (X + X^*)/2:
// U_ij = [[0, R_ij], [R_ji^*, 0]], V likewise, state (psi, 0, 0, psi)/sqrt2.
TensorStrategy ObservableDilationTensor(const TensorStrategy& s);

// Commuting-model version on C^4 (x) C^d:
// U_ij = I_2 (x) [[0, R_ij], [R_ji^*, 0]],
// V_kl = [[0, S_kl], [S_lk^*, 0]] (x) I_2,
// state (psi, 0, 0, psi)/sqrt2. Throws ModelError on non-commuting input.
CommutingStrategy ObservableDilationCommuting(const CommutingStrategy& s);

// ConvexCombine(s, AdjointStrategy(s), 1/2): correlation (X + X^*)/2.
TensorStrategy SymmetrizeStrategy(const TensorStrategy& s);
CommutingStrategy SymmetrizeStrategy(const CommutingStrategy& s);

// The size-2n correlation with X in the ((0,1),(0,1)) corner, X^* in the
// ((1,0),(1,0)) corner and zero elsewhere. Super-block coordinates refer to
// a = alpha*n + i for a in [0, 2n).
Correlation CornerPattern(const Correlation& x);

// The X corner of a size-2n correlation.
Correlation CornerBlock(const Correlation& w);

// max |W - CornerPattern(CornerBlock(W))|: off-pattern mass plus any mismatch
// between the two corners.
double CornerPatternViolation(const Correlation& w);

struct EmbeddingWitness {
  Correlation original;
  Correlation embedded;
};

template <typename Strategy>
struct Embedding {
  Strategy strategy;
  EmbeddingWitness witness;
};

// Size-2n lift [[0, phase U], [conj(phase) U^*, 0]] of U and likewise of V
// with `phase_b`, sharing the state. Its correlation carries the middle blocks
// Z, Z^* besides the corners.
TensorStrategy AntiDiagonalLift(const TensorStrategy& s, Complex phase_a = 1.0,
                                Complex phase_b = 1.0);
CommutingStrategy AntiDiagonalLift(const CommutingStrategy& s, Complex phase_a = 1.0,
                                   Complex phase_b = 1.0);

// Averages the lift with the (iU, -iV) lift so the middle blocks cancel.
Embedding<TensorStrategy> EmbedSelfAdjoint(const TensorStrategy& s);
Embedding<CommutingStrategy> EmbedSelfAdjoint(const CommutingStrategy& s);

// Unitary dilation of the n x n block contraction S (blocks block_dim),
// canonically shuffled so block (i, j) is
//   [[S_ij, (sqrt(I - S S^*))_ij], [(sqrt(I - S^* S))_ij, -(S_ji)^*]].
// Defect operators come from one SVD of S. Throws ValidationError when
// ||S|| > 1 + tol.
CMatrix HalmosDilation(const CMatrix& s, int n, int block_dim, double tol = kEntrywiseTol);

// Recovers a size-n tensor strategy realising the X corner of a size-2n
// strategy whose correlation has the corner pattern (EmbeddingError
// otherwise). Uses S = (U_{i,j+n}), T = (V_{k,l+n}) and state (psi, 0, 0, 0).
TensorStrategy ExtractFromEmbeddingTensor(const TensorStrategy& s2n);
TensorStrategy ExtractFromEmbeddingTensor(const TensorStrategy& s2n,
                                          const ContractionDilator& dilate);

// Commuting version: two-stage dilation on C^4 (x) C^d.
CommutingStrategy ExtractFromEmbeddingCommuting(const CommutingStrategy& s2n);
CommutingStrategy ExtractFromEmbeddingCommuting(const CommutingStrategy& s2n,
                                                const ContractionDilator& dilate);

// Given n x n block contractions S, T on C^d whose entries *-commute, builds
// unitaries A, B on C^4 (x) C^d with commuting entries such that
// <A_ij B_kl psi~, psi~> = <S_ij T_kl psi, psi> for psi~ = (psi, 0, 0, 0).
CommutingStrategy DilateCommutingContractions(const CMatrix& s, const CMatrix& t, int n,
                                              int dim, const CVector& psi,
                                              const ContractionDilator& dilate);

}  // namespace qxor::dilation

#endif  // QXOR_DILATION_H_
