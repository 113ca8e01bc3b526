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

#include "qxor/dilation.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qxor/errors.h"

namespace qxor::dilation {
namespace {

// [[0, a], [b, 0]] for equally sized square a, b.
CMatrix Flip(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index d = a.rows();
  CMatrix out = CMatrix::Zero(2 * d, 2 * d);
  out.topRightCorner(d, d) = a;
  out.bottomLeftCorner(d, d) = b;
  return out;
}

CMatrix DirectSum(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

// Observable lift of one player's unitary: block (i, j) of the result is
// [[0, W_ij], [(W_ji)^*, 0]]; the canonical shuffle of [[0, W], [W^*, 0]].
CMatrix ObservableLift(const CMatrix& w, int n, int d) {
  return linalg::CanonicalShuffle(Flip(w, w.adjoint()), 2, n, d);
}

// [[0, phase W], [conj(phase) W^*, 0]] as a 2n-block matrix.
CMatrix PhasedLift(const CMatrix& w, Complex phase) {
  return Flip(phase * w, std::conj(phase) * w.adjoint());
}

void RequireEmbedding(const Correlation& w) {
  const double violation = CornerPatternViolation(w);
  if (violation > kCornerTol) {
    std::ostringstream msg;
    msg << "strategy is not a corner embedding: pattern violation " << violation;
    throw EmbeddingError(msg.str());
  }
}

int HalfSize(int n) {
  if (n < 2 || n % 2 != 0) {
    throw EmbeddingError("corner embedding needs an even game size >= 2, got " +
                         std::to_string(n));
  }
  return n / 2;
}

CMatrix DefaultDilation(const CMatrix& s, int n, int block_dim) {
  return HalmosDilation(s, n, block_dim);
}

}  // namespace

TensorStrategy ObservableDilationTensor(const TensorStrategy& s) {
  const int n = s.n();
  const int da = s.dim_a();
  const int db = s.dim_b();
  CMatrix u = ObservableLift(s.u(), n, da);
  CMatrix v = ObservableLift(s.v(), n, db);
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(4) * da * db);
  const double w = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < da; ++a) {
    for (int b = 0; b < db; ++b) {
      const Complex amp = w * s.psi()(a * db + b);
      psi(a * 2 * db + b) = amp;                        // sA = 0, sB = 0
      psi((da + a) * 2 * db + db + b) = amp;            // sA = 1, sB = 1
    }
  }
  return TensorStrategy(n, 2 * da, 2 * db, std::move(u), std::move(v), std::move(psi));
}

CommutingStrategy ObservableDilationCommuting(const CommutingStrategy& s) {
  if (const double violation = CheckCommuting(s); violation > kEntrywiseTol) {
    std::ostringstream msg;
    msg << "input strategy blocks do not commute (violation " << violation << ")";
    throw ModelError(msg.str());
  }
  const int n = s.n();
  const int d = s.dim();
  const CMatrix id2 = CMatrix::Identity(2, 2);
  CMatrix u = linalg::AssembleBlocks(n, 4 * d, [&](int i, int j) {
    return linalg::Kron(id2, Flip(s.UBlock(i, j), s.UBlock(j, i).adjoint()));
  });
  CMatrix v = linalg::AssembleBlocks(n, 4 * d, [&](int k, int l) {
    return Flip(linalg::Kron(id2, s.VBlock(k, l)), linalg::Kron(id2, s.VBlock(l, k).adjoint()));
  });
  CVector psi = CVector::Zero(4 * d);
  psi.head(d) = s.psi() / std::sqrt(2.0);
  psi.tail(d) = s.psi() / std::sqrt(2.0);
  return CommutingStrategy(n, 4 * d, std::move(u), std::move(v), std::move(psi));
}

TensorStrategy SymmetrizeStrategy(const TensorStrategy& s) {
  return ConvexCombine(s, AdjointStrategy(s), 0.5);
}

CommutingStrategy SymmetrizeStrategy(const CommutingStrategy& s) {
  return ConvexCombine(s, AdjointStrategy(s), 0.5);
}

Correlation CornerPattern(const Correlation& x) {
  const int n = x.n;
  const linalg::TensorLayout small{n};
  const linalg::TensorLayout big{2 * n};
  const CMatrix xa = x.x.adjoint();
  Correlation w{2 * n, CMatrix::Zero(big.Dim(), big.Dim())};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const int r = small.Row(i, k);
          const int c = small.Col(j, l);
          w.x(big.Row(i, k), big.Col(j + n, l + n)) = x.x(r, c);
          w.x(big.Row(i + n, k + n), big.Col(j, l)) = xa(r, c);
        }
      }
    }
  }
  return w;
}

Correlation CornerBlock(const Correlation& w) {
  const int n = HalfSize(w.n);
  const linalg::TensorLayout small{n};
  const linalg::TensorLayout big{w.n};
  Correlation x{n, CMatrix(small.Dim(), small.Dim())};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          x.x(small.Row(i, k), small.Col(j, l)) = w.x(big.Row(i, k), big.Col(j + n, l + n));
        }
      }
    }
  }
  return x;
}

double CornerPatternViolation(const Correlation& w) {
  return linalg::MaxAbs(w.x - CornerPattern(CornerBlock(w)).x);
}

TensorStrategy AntiDiagonalLift(const TensorStrategy& s, Complex phase_a, Complex phase_b) {
  return TensorStrategy(2 * s.n(), s.dim_a(), s.dim_b(), PhasedLift(s.u(), phase_a),
                        PhasedLift(s.v(), phase_b), s.psi());
}

CommutingStrategy AntiDiagonalLift(const CommutingStrategy& s, Complex phase_a,
                                   Complex phase_b) {
  return CommutingStrategy(2 * s.n(), s.dim(), PhasedLift(s.u(), phase_a),
                           PhasedLift(s.v(), phase_b), s.psi());
}

Embedding<TensorStrategy> EmbedSelfAdjoint(const TensorStrategy& s) {
  const Complex i_unit(0.0, 1.0);
  TensorStrategy combined =
      ConvexCombine(AntiDiagonalLift(s), AntiDiagonalLift(s, i_unit, -i_unit), 0.5);
  Correlation embedded = CorrelationTensor(combined);
  return {std::move(combined), {CorrelationTensor(s), std::move(embedded)}};
}

Embedding<CommutingStrategy> EmbedSelfAdjoint(const CommutingStrategy& s) {
  const Complex i_unit(0.0, 1.0);
  CommutingStrategy combined =
      ConvexCombine(AntiDiagonalLift(s), AntiDiagonalLift(s, i_unit, -i_unit), 0.5);
  Correlation embedded = CorrelationCommuting(combined);
  return {std::move(combined), {CorrelationCommuting(s), std::move(embedded)}};
}

CMatrix HalmosDilation(const CMatrix& s, int n, int block_dim, double tol) {
  linalg::RequireSquare(s, "HalmosDilation");
  if (n < 1 || block_dim < 1 || s.rows() != static_cast<Eigen::Index>(n) * block_dim) {
    throw ShapeError("HalmosDilation: contraction is not " + std::to_string(n) + "x" +
                     std::to_string(n) + " blocks of size " + std::to_string(block_dim));
  }
  Eigen::JacobiSVD<CMatrix> svd(s, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  if (sigma(0) > 1.0 + tol) {
    std::ostringstream msg;
    msg << "HalmosDilation: operator norm " << sigma(0) << " exceeds 1";
    throw ValidationError(msg.str());
  }
  Eigen::VectorXd defect(sigma.size());
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    const double sk = std::min(sigma(k), 1.0);
    const double gap = (1.0 - sk) * (1.0 + sk);
    defect(k) = gap > kDefectFloor ? std::sqrt(gap) : 0.0;
  }
  // S = P diag(sigma) Q^*: sqrt(I - S S^*) = P D P^*, sqrt(I - S^* S) = Q D Q^*.
  const CMatrix& p = svd.matrixU();
  const CMatrix& q = svd.matrixV();
  const auto dsq = defect.cast<Complex>().asDiagonal();
  const Eigen::Index dim = s.rows();
  CMatrix full(2 * dim, 2 * dim);
  full.topLeftCorner(dim, dim) = s;
  full.topRightCorner(dim, dim) = p * dsq * p.adjoint();
  full.bottomLeftCorner(dim, dim) = q * dsq * q.adjoint();
  full.bottomRightCorner(dim, dim) = -s.adjoint();
  return linalg::CanonicalShuffle(full, 2, n, block_dim);
}

TensorStrategy ExtractFromEmbeddingTensor(const TensorStrategy& s2n) {
  return ExtractFromEmbeddingTensor(s2n, DefaultDilation);
}

TensorStrategy ExtractFromEmbeddingTensor(const TensorStrategy& s2n,
                                          const ContractionDilator& dilate) {
  const int n = HalfSize(s2n.n());
  RequireEmbedding(CorrelationTensor(s2n));
  const int da = s2n.dim_a();
  const int db = s2n.dim_b();
  const CMatrix s = s2n.u().topRightCorner(n * da, n * da);
  const CMatrix t = s2n.v().topRightCorner(n * db, n * db);
  CMatrix u = dilate(s, n, da);
  CMatrix v = dilate(t, n, db);
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(4) * da * db);
  for (int a = 0; a < da; ++a) {
    for (int b = 0; b < db; ++b) psi(a * 2 * db + b) = s2n.psi()(a * db + b);
  }
  return TensorStrategy(n, 2 * da, 2 * db, std::move(u), std::move(v), std::move(psi));
}

CommutingStrategy ExtractFromEmbeddingCommuting(const CommutingStrategy& s2n) {
  return ExtractFromEmbeddingCommuting(s2n, DefaultDilation);
}

CommutingStrategy ExtractFromEmbeddingCommuting(const CommutingStrategy& s2n,
                                                const ContractionDilator& dilate) {
  const int n = HalfSize(s2n.n());
  RequireEmbedding(CorrelationCommuting(s2n));
  const int d = s2n.dim();
  return DilateCommutingContractions(s2n.u().topRightCorner(n * d, n * d),
                                     s2n.v().topRightCorner(n * d, n * d), n, d, s2n.psi(),
                                     dilate);
}

CommutingStrategy DilateCommutingContractions(const CMatrix& s, const CMatrix& t, int n,
                                              int dim, const CVector& psi,
                                              const ContractionDilator& dilate) {
  // Stage one: C_ij = diag(S_ij, S_ij) against the dilation D of T.
  const CMatrix d_big = dilate(t, n, dim);
  const CMatrix c_big = linalg::AssembleBlocks(n, 2 * dim, [&](int i, int j) {
    const CMatrix sb = linalg::Block(s, dim, i, j);
    return DirectSum(sb, sb);
  });
  // Stage two: dilate C, and double D to diag(D_kl, D_kl).
  CMatrix a = dilate(c_big, n, 2 * dim);
  CMatrix b = linalg::AssembleBlocks(n, 4 * dim, [&](int k, int l) {
    const CMatrix db = linalg::Block(d_big, 2 * dim, k, l);
    return DirectSum(db, db);
  });
  CVector lifted = CVector::Zero(4 * dim);
  lifted.head(dim) = psi;
  return CommutingStrategy(n, 4 * dim, std::move(a), std::move(b), std::move(lifted));
}

}  // namespace qxor::dilation
