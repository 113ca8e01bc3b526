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

// Dense complex linear algebra shared by the rest of the library.
//
// Matrices are plain Eigen dynamic matrices. Block structure is implicit: a
// matrix "in n x n blocks of size d" is an (n*d) x (n*d) matrix whose (i, j)
// block occupies rows [i*d, (i+1)*d) and columns [j*d, (j+1)*d).

#ifndef QXOR_LINALG_H_
#define QXOR_LINALG_H_

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace qxor {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

// Project-wide default tolerances.
inline constexpr double kEntrywiseTol = 1e-9;
inline constexpr double kSqrtClampTol = 1e-9;

namespace linalg {

// Flattening of a pair-of-pairs index ((i, j), (k, l)) of M_n (x) M_n into a
// position of an n^2 x n^2 matrix. Indices are zero-based here:
// row = i*n + k, col = j*n + l. With this choice the bias functional
// sum M_{(j,i),(l,k)} X_{(i,j),(k,l)} is the ordinary trace Tr(M X).
struct TensorLayout {
  int n = 1;

  int Dim() const { return n * n; }
  int Row(int i, int k) const { return i * n + k; }
  int Col(int j, int l) const { return j * n + l; }
};

// Largest entry modulus; 0 for an empty matrix.
double MaxAbs(const CMatrix& a);

bool AllFinite(const CMatrix& a);

// Throws ShapeError unless `a` is square.
void RequireSquare(const CMatrix& a, const char* what);

// True iff max |A*A - I| <= tol entrywise.
bool IsUnitary(const CMatrix& a, double tol = kEntrywiseTol);

// max |A - A*| entrywise.
double HermitianViolation(const CMatrix& a);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in [-tol, 0)
// are clamped to zero; anything below -tol raises NumericalError.
CMatrix HermitianSqrt(const CMatrix& p, double tol = kSqrtClampTol);

// Unitary U maximizing Re Tr(U A). With A = W S V* (full SVD) this is V W*.
CMatrix PolarFactor(const CMatrix& a);

double TraceNorm(const CMatrix& a);
double OperatorNorm(const CMatrix& a);

// Tr (x) id on C^{n_game} (x) C^{d_env}, game register leading.
CMatrix PartialTraceGame(const CMatrix& o, int n_game, int d_env);

// Similarity by the permutation that swaps the two outer block levels of a
// matrix organised as outer x outer blocks, each inner x inner blocks of
// block_dim x block_dim. Calling it again with outer/inner exchanged undoes
// it.
CMatrix CanonicalShuffle(const CMatrix& a, int outer_blocks, int inner_blocks,
                         int block_dim);

// Copy of block (i, j) of a matrix tiled by block_dim x block_dim blocks.
CMatrix Block(const CMatrix& a, int block_dim, int i, int j);

// Assembles an (n*d) x (n*d) matrix from an n x n grid of d x d blocks
// produced by `block(i, j)`.
template <typename BlockFn>
CMatrix AssembleBlocks(int n, int d, BlockFn&& block) {
  CMatrix out(n * d, n * d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.block(i * d, j * d, d, d) = block(i, j);
    }
  }
  return out;
}

CMatrix Kron(const CMatrix& a, const CMatrix& b);
CVector Kron(const CVector& a, const CVector& b);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
// R's diagonal folded into Q.
CMatrix HaarUnitary(int dim, std::mt19937_64& rng);
CMatrix HaarUnitary(int dim, std::uint64_t seed);

// Uniformly distributed unit vector in C^dim.
CVector RandomUnitVector(int dim, std::mt19937_64& rng);

// Matrix of independent standard complex Gaussians.
CMatrix GinibreMatrix(int rows, int cols, std::mt19937_64& rng);

}  // namespace linalg
}  // namespace qxor

#endif  // QXOR_LINALG_H_
