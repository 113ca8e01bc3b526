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

#include "qxor/linalg.h"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qxor/errors.h"

namespace qxor::linalg {

double MaxAbs(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool AllFinite(const CMatrix& a) { return a.allFinite(); }

void RequireSquare(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw ShapeError(std::string(what) + ": expected a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

bool IsUnitary(const CMatrix& a, double tol) {
  RequireSquare(a, "IsUnitary");
  const CMatrix gram = a.adjoint() * a;
  return MaxAbs(gram - CMatrix::Identity(a.rows(), a.cols())) <= tol;
}

double HermitianViolation(const CMatrix& a) {
  RequireSquare(a, "HermitianViolation");
  return MaxAbs(a - a.adjoint());
}

CMatrix HermitianSqrt(const CMatrix& p, double tol) {
  RequireSquare(p, "HermitianSqrt");
  if (HermitianViolation(p) > tol) {
    throw NumericalError("HermitianSqrt: matrix is not Hermitian within tolerance");
  }
  const CMatrix sym = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("HermitianSqrt: eigendecomposition failed");
  }
  Eigen::VectorXd roots = eig.eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const double lambda = roots(i);
    if (lambda < -tol) {
      throw NumericalError("HermitianSqrt: matrix is not PSD (eigenvalue " +
                           std::to_string(lambda) + ")");
    }
    roots(i) = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  const CMatrix& q = eig.eigenvectors();
  return q * roots.cast<Complex>().asDiagonal() * q.adjoint();
}

CMatrix PolarFactor(const CMatrix& a) {
  RequireSquare(a, "PolarFactor");
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixV() * svd.matrixU().adjoint();
}

double TraceNorm(const CMatrix& a) {
  RequireSquare(a, "TraceNorm");
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues().sum();
}

double OperatorNorm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

CMatrix PartialTraceGame(const CMatrix& o, int n_game, int d_env) {
  RequireSquare(o, "PartialTraceGame");
  if (n_game < 1 || d_env < 1 || o.rows() != static_cast<Eigen::Index>(n_game) * d_env) {
    throw ShapeError("PartialTraceGame: dimension " + std::to_string(o.rows()) +
                     " is not " + std::to_string(n_game) + "*" + std::to_string(d_env));
  }
  CMatrix out = CMatrix::Zero(d_env, d_env);
  for (int g = 0; g < n_game; ++g) {
    out += o.block(g * d_env, g * d_env, d_env, d_env);
  }
  return out;
}

CMatrix CanonicalShuffle(const CMatrix& a, int outer_blocks, int inner_blocks,
                         int block_dim) {
  RequireSquare(a, "CanonicalShuffle");
  if (outer_blocks < 1 || inner_blocks < 1 || block_dim < 1 ||
      a.rows() != static_cast<Eigen::Index>(outer_blocks) * inner_blocks * block_dim) {
    throw ShapeError("CanonicalShuffle: dimension " + std::to_string(a.rows()) +
                     " does not factor as " + std::to_string(outer_blocks) + "*" +
                     std::to_string(inner_blocks) + "*" + std::to_string(block_dim));
  }
  const auto remap = [&](Eigen::Index r) {
    const Eigen::Index x = r % block_dim;
    const Eigen::Index p = (r / block_dim) % inner_blocks;
    const Eigen::Index o = r / (static_cast<Eigen::Index>(block_dim) * inner_blocks);
    return (p * outer_blocks + o) * block_dim + x;
  };
  const Eigen::Index dim = a.rows();
  Eigen::VectorXi target(dim);
  for (Eigen::Index r = 0; r < dim; ++r) target(r) = static_cast<int>(remap(r));
  CMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      out(target(r), target(c)) = a(r, c);
    }
  }
  return out;
}

CMatrix Block(const CMatrix& a, int block_dim, int i, int j) {
  return a.block(static_cast<Eigen::Index>(i) * block_dim,
                 static_cast<Eigen::Index>(j) * block_dim, block_dim, block_dim);
}

CMatrix Kron(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

CVector Kron(const CVector& a, const CVector& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

CMatrix GinibreMatrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix z(rows, cols);
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im);
    }
  }
  return z;
}

CMatrix HaarUnitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw ShapeError("HaarUnitary: dim must be >= 1");
  const CMatrix z = GinibreMatrix(dim, dim, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int k = 0; k < dim; ++k) {
    const Complex diag = r(k, k);
    const double mod = std::abs(diag);
    q.col(k) *= mod > 0.0 ? diag / mod : Complex(1.0, 0.0);
  }
  return q;
}

CMatrix HaarUnitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return HaarUnitary(dim, rng);
}

CVector RandomUnitVector(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw ShapeError("RandomUnitVector: dim must be >= 1");
  CVector v = GinibreMatrix(dim, 1, rng).col(0);
  return v / v.norm();
}

}  // namespace qxor::linalg
