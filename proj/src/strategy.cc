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

#include "qxor/strategy.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "qxor/errors.h"

namespace qxor {
namespace {

void CheckPlayer(const CMatrix& w, int n, int d, const char* name, double tol) {
  const Eigen::Index dim = static_cast<Eigen::Index>(n) * d;
  if (w.rows() != dim || w.cols() != dim) {
    std::ostringstream msg;
    msg << name << " must be " << dim << "x" << dim << ", got " << w.rows() << "x" << w.cols();
    throw ShapeError(msg.str());
  }
  if (!w.allFinite()) throw ValidationError(std::string(name) + " has non-finite entries");
  if (!linalg::IsUnitary(w, tol)) throw ValidationError(std::string(name) + " is not unitary");
}

void CheckState(const CVector& psi, Eigen::Index dim, double tol) {
  if (psi.size() != dim) {
    throw ShapeError("state must have length " + std::to_string(dim) + ", got " +
                     std::to_string(psi.size()));
  }
  if (!psi.allFinite()) throw ValidationError("state has non-finite entries");
  if (std::abs(psi.norm() - 1.0) > tol) throw ValidationError("state is not a unit vector");
}

void CheckPhase(Complex lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > kEntrywiseTol) {
    throw ValidationError("phase must have unit modulus");
  }
}

void CheckLambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("convex weight must lie in [0, 1]");
  }
}

// Per-block direct sum: block (i, j) of the result is diag(A_ij, B_ij).
CMatrix BlockwiseDirectSum(const CMatrix& a, int da, const CMatrix& b, int db, int n) {
  const int d = da + db;
  return linalg::AssembleBlocks(n, d, [&](int i, int j) {
    CMatrix blk = CMatrix::Zero(d, d);
    blk.topLeftCorner(da, da) = linalg::Block(a, da, i, j);
    blk.bottomRightCorner(db, db) = linalg::Block(b, db, i, j);
    return blk;
  });
}

}  // namespace

TensorStrategy::TensorStrategy(int n, int dim_a, int dim_b, CMatrix u, CMatrix v, CVector psi,
                               double tol)
    : n_(n), dim_a_(dim_a), dim_b_(dim_b), u_(std::move(u)), v_(std::move(v)),
      psi_(std::move(psi)) {
  if (n_ < 1 || dim_a_ < 1 || dim_b_ < 1) {
    throw ShapeError("tensor strategy needs n, dA, dB >= 1");
  }
  CheckPlayer(u_, n_, dim_a_, "U", tol);
  CheckPlayer(v_, n_, dim_b_, "V", tol);
  CheckState(psi_, static_cast<Eigen::Index>(dim_a_) * dim_b_, tol);
}

CommutingStrategy::CommutingStrategy(int n, int dim, CMatrix u, CMatrix v, CVector psi,
                                     double tol)
    : n_(n), dim_(dim), u_(std::move(u)), v_(std::move(v)), psi_(std::move(psi)) {
  if (n_ < 1 || dim_ < 1) throw ShapeError("commuting strategy needs n, d >= 1");
  CheckPlayer(u_, n_, dim_, "U", tol);
  CheckPlayer(v_, n_, dim_, "V", tol);
  CheckState(psi_, dim_, tol);
}

Correlation CorrelationTensor(const TensorStrategy& s) {
  const int n = s.n();
  const int da = s.dim_a();
  const int db = s.dim_b();
  // psi as a dA x dB matrix; (A (x) B) psi corresponds to A Psi B^T, so
  // <(A (x) B) psi, psi> = sum_{b,b'} (Psi^* A Psi)_{b b'} B_{b b'}.
  CMatrix psi_mat(da, db);
  for (int a = 0; a < da; ++a) {
    for (int b = 0; b < db; ++b) psi_mat(a, b) = s.psi()(a * db + b);
  }
  std::vector<CMatrix> reduced(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      reduced[i * n + j] = psi_mat.adjoint() * s.UBlock(i, j) * psi_mat;
    }
  }
  const linalg::TensorLayout layout{n};
  Correlation out{n, CMatrix(layout.Dim(), layout.Dim())};
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const CMatrix vb = s.VBlock(k, l);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          out.x(layout.Row(i, k), layout.Col(j, l)) = reduced[i * n + j].cwiseProduct(vb).sum();
        }
      }
    }
  }
  return out;
}

double CheckCommuting(const CommutingStrategy& s) {
  const int n = s.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CMatrix ub = s.UBlock(i, j);
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const CMatrix vb = s.VBlock(k, l);
          worst = std::max(worst, linalg::MaxAbs(ub * vb - vb * ub));
        }
      }
    }
  }
  return worst;
}

Correlation CorrelationCommuting(const CommutingStrategy& s, double tol) {
  const double violation = CheckCommuting(s);
  if (violation > tol) {
    std::ostringstream msg;
    msg << "commuting strategy blocks do not commute (violation " << violation << ")";
    throw ModelError(msg.str());
  }
  const int n = s.n();
  // <U_ij V_kl psi, psi> = (U_ij^* psi)^* (V_kl psi).
  std::vector<CVector> left(static_cast<std::size_t>(n) * n);
  std::vector<CVector> right(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      left[i * n + j] = s.UBlock(i, j).adjoint() * s.psi();
      right[i * n + j] = s.VBlock(i, j) * s.psi();
    }
  }
  const linalg::TensorLayout layout{n};
  Correlation out{n, CMatrix(layout.Dim(), layout.Dim())};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          out.x(layout.Row(i, k), layout.Col(j, l)) = left[i * n + j].dot(right[k * n + l]);
        }
      }
    }
  }
  return out;
}

Correlation CorrelationOf(const AnyStrategy& s) {
  return std::visit(
      [](const auto& strat) -> Correlation {
        using T = std::decay_t<decltype(strat)>;
        if constexpr (std::is_same_v<T, TensorStrategy>) {
          return CorrelationTensor(strat);
        } else {
          return CorrelationCommuting(strat);
        }
      },
      s);
}

Complex BiasTrace(const QuantumXorGame& g, const Correlation& x) {
  if (x.n != g.n() || x.x.rows() != g.matrix().rows() || x.x.cols() != g.matrix().cols()) {
    throw ShapeError("game size " + std::to_string(g.n()) + " does not match correlation size " +
                     std::to_string(x.n));
  }
  return (g.matrix() * x.x).trace();
}

Complex BiasDirect(const QuantumXorGame& g, const TensorStrategy& s) {
  if (g.n() != s.n()) {
    throw ShapeError("game size " + std::to_string(g.n()) + " does not match strategy size " +
                     std::to_string(s.n()));
  }
  const int n = s.n();
  const int env = s.dim_a() * s.dim_b();
  const linalg::TensorLayout layout{n};
  const int games = layout.Dim();
  CMatrix uv(static_cast<Eigen::Index>(games) * env, static_cast<Eigen::Index>(games) * env);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          uv.block(static_cast<Eigen::Index>(layout.Row(i, k)) * env,
                   static_cast<Eigen::Index>(layout.Col(j, l)) * env, env, env) =
              linalg::Kron(s.UBlock(i, j), s.VBlock(k, l));
        }
      }
    }
  }
  const CMatrix inflated = linalg::Kron(g.matrix(), CMatrix::Identity(env, env));
  const CMatrix reduced = linalg::PartialTraceGame(uv * inflated, games, env);
  return s.psi().dot(reduced * s.psi());
}

double SuccessProbability(double bias) {
  if (!(bias >= -1.0 - kEntrywiseTol && bias <= 1.0 + kEntrywiseTol)) {
    throw ValidationError("bias must lie in [-1, 1]");
  }
  return (1.0 + bias) / 2.0;
}

TensorStrategy RandomTensorStrategy(int n, int dim_a, int dim_b, std::mt19937_64& rng) {
  if (n < 1 || dim_a < 1 || dim_b < 1) throw ShapeError("dimensions must be >= 1");
  CMatrix u = linalg::HaarUnitary(n * dim_a, rng);
  CMatrix v = linalg::HaarUnitary(n * dim_b, rng);
  CVector psi = linalg::RandomUnitVector(dim_a * dim_b, rng);
  return TensorStrategy(n, dim_a, dim_b, std::move(u), std::move(v), std::move(psi));
}

TensorStrategy RandomTensorStrategy(int n, int dim_a, int dim_b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return RandomTensorStrategy(n, dim_a, dim_b, rng);
}

CommutingStrategy CommutingFromTensor(const TensorStrategy& s) {
  const int n = s.n();
  const CMatrix id_a = CMatrix::Identity(s.dim_a(), s.dim_a());
  const CMatrix id_b = CMatrix::Identity(s.dim_b(), s.dim_b());
  const int d = s.dim_a() * s.dim_b();
  CMatrix u = linalg::AssembleBlocks(n, d, [&](int i, int j) {
    return linalg::Kron(s.UBlock(i, j), id_b);
  });
  CMatrix v = linalg::AssembleBlocks(n, d, [&](int k, int l) {
    return linalg::Kron(id_a, s.VBlock(k, l));
  });
  return CommutingStrategy(n, d, std::move(u), std::move(v), s.psi());
}

CommutingStrategy RandomCommutingStrategy(int n, int dim_a, int dim_b, std::mt19937_64& rng) {
  const CommutingStrategy base = CommutingFromTensor(RandomTensorStrategy(n, dim_a, dim_b, rng));
  const int d = base.dim();
  const CMatrix w = linalg::HaarUnitary(d, rng);
  const auto conjugate = [&](const CMatrix& big) {
    return linalg::AssembleBlocks(n, d, [&](int i, int j) {
      return CMatrix(w * linalg::Block(big, d, i, j) * w.adjoint());
    });
  };
  return CommutingStrategy(n, d, conjugate(base.u()), conjugate(base.v()), w * base.psi());
}

TensorStrategy ScaleByPhase(const TensorStrategy& s, Complex lambda) {
  CheckPhase(lambda);
  return TensorStrategy(s.n(), s.dim_a(), s.dim_b(), lambda * s.u(), s.v(), s.psi());
}

CommutingStrategy ScaleByPhase(const CommutingStrategy& s, Complex lambda) {
  CheckPhase(lambda);
  return CommutingStrategy(s.n(), s.dim(), lambda * s.u(), s.v(), s.psi());
}

Complex PhaseFor(Complex bias) {
  const double mod = std::abs(bias);
  if (mod == 0.0) return Complex(1.0, 0.0);
  return std::conj(bias) / mod;
}

TensorStrategy PhaseAdjust(const QuantumXorGame& g, const TensorStrategy& s) {
  return ScaleByPhase(s, PhaseFor(BiasTrace(g, CorrelationTensor(s))));
}

CommutingStrategy PhaseAdjust(const QuantumXorGame& g, const CommutingStrategy& s) {
  return ScaleByPhase(s, PhaseFor(BiasTrace(g, CorrelationCommuting(s))));
}

TensorStrategy AdjointStrategy(const TensorStrategy& s) {
  return TensorStrategy(s.n(), s.dim_a(), s.dim_b(), s.u().adjoint(), s.v().adjoint(), s.psi());
}

CommutingStrategy AdjointStrategy(const CommutingStrategy& s) {
  return CommutingStrategy(s.n(), s.dim(), s.u().adjoint(), s.v().adjoint(), s.psi());
}

TensorStrategy ConvexCombine(const TensorStrategy& s1, const TensorStrategy& s2, double lambda) {
  CheckLambda(lambda);
  if (s1.n() != s2.n()) throw ShapeError("cannot combine strategies of different game size");
  const int n = s1.n();
  const int da = s1.dim_a() + s2.dim_a();
  const int db = s1.dim_b() + s2.dim_b();
  CMatrix u = BlockwiseDirectSum(s1.u(), s1.dim_a(), s2.u(), s2.dim_a(), n);
  CMatrix v = BlockwiseDirectSum(s1.v(), s1.dim_b(), s2.v(), s2.dim_b(), n);
  // The state lives in (A1 + A2) (x) (B1 + B2); only the A1 B1 and A2 B2
  // components are populated, so the cross terms of the correlation vanish.
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(da) * db);
  const double w1 = std::sqrt(lambda);
  const double w2 = std::sqrt(1.0 - lambda);
  for (int a = 0; a < s1.dim_a(); ++a) {
    for (int b = 0; b < s1.dim_b(); ++b) psi(a * db + b) = w1 * s1.psi()(a * s1.dim_b() + b);
  }
  for (int a = 0; a < s2.dim_a(); ++a) {
    for (int b = 0; b < s2.dim_b(); ++b) {
      psi((s1.dim_a() + a) * db + s1.dim_b() + b) = w2 * s2.psi()(a * s2.dim_b() + b);
    }
  }
  return TensorStrategy(n, da, db, std::move(u), std::move(v), std::move(psi));
}

CommutingStrategy ConvexCombine(const CommutingStrategy& s1, const CommutingStrategy& s2,
                                double lambda) {
  CheckLambda(lambda);
  if (s1.n() != s2.n()) throw ShapeError("cannot combine strategies of different game size");
  const int n = s1.n();
  CMatrix u = BlockwiseDirectSum(s1.u(), s1.dim(), s2.u(), s2.dim(), n);
  CMatrix v = BlockwiseDirectSum(s1.v(), s1.dim(), s2.v(), s2.dim(), n);
  CVector psi(s1.dim() + s2.dim());
  psi << std::sqrt(lambda) * s1.psi(), std::sqrt(1.0 - lambda) * s2.psi();
  return CommutingStrategy(n, s1.dim() + s2.dim(), std::move(u), std::move(v), std::move(psi));
}

bool IsObservableStrategy(const TensorStrategy& s, double tol) {
  return linalg::HermitianViolation(s.u()) <= tol && linalg::HermitianViolation(s.v()) <= tol;
}

bool IsObservableStrategy(const CommutingStrategy& s, double tol) {
  return linalg::HermitianViolation(s.u()) <= tol && linalg::HermitianViolation(s.v()) <= tol;
}

}  // namespace qxor
