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

#include "qxor/game.h"

#include <cmath>
#include <sstream>
#include <string>

#include "qxor/errors.h"

namespace qxor {

QuantumXorGame QuantumXorGame::Negated() const { return QuantumXorGame(n_, -m_, strict_); }

QuantumXorGame ValidateGame(const CMatrix& m, int n, bool strict, double tol) {
  if (n < 1) throw ShapeError("game size must be >= 1");
  const Eigen::Index dim = static_cast<Eigen::Index>(n) * n;
  if (m.rows() != dim || m.cols() != dim) {
    throw ShapeError("game matrix must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                     " for n=" + std::to_string(n));
  }
  if (!m.allFinite()) throw ValidationError("game matrix has non-finite entries");
  const double asym = linalg::HermitianViolation(m);
  if (asym > tol) {
    std::ostringstream msg;
    msg << "game matrix is not self-adjoint (max |M - M*| = " << asym << ")";
    throw ValidationError(msg.str());
  }
  CMatrix herm = 0.5 * (m + m.adjoint());
  const double norm = linalg::TraceNorm(herm);
  const bool ok = strict ? std::abs(norm - 1.0) <= tol : norm <= 1.0 + tol;
  if (!ok) {
    std::ostringstream msg;
    msg << "trace-norm condition violated: ||M||_1 = " << norm
        << (strict ? " (strict game requires 1)" : " (requires <= 1)");
    throw ValidationError(msg.str());
  }
  return QuantumXorGame(n, std::move(herm), strict);
}

QuantumXorGame GameFromOutcomes(const OutcomeSpec& spec, double tol) {
  if (spec.n < 1) throw ShapeError("game size must be >= 1");
  const int dim = spec.n * spec.n;
  if (spec.outcomes.empty()) throw ValidationError("outcome list is empty");
  if (static_cast<int>(spec.outcomes.size()) > dim) {
    throw ValidationError("more outcomes than the dimension n^2 allows");
  }
  double total = 0.0;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::size_t idx = 0; idx < spec.outcomes.size(); ++idx) {
    const Outcome& o = spec.outcomes[idx];
    if (o.state.size() != dim) {
      throw ShapeError("outcome " + std::to_string(idx) + ": state must have length " +
                       std::to_string(dim));
    }
    if (!(o.p >= 0.0 && o.p <= 1.0)) {
      throw ValidationError("outcome " + std::to_string(idx) + ": probability outside [0,1]");
    }
    if (o.c != 0 && o.c != 1) {
      throw ValidationError("outcome " + std::to_string(idx) + ": bit c must be 0 or 1");
    }
    if (std::abs(o.state.norm() - 1.0) > tol) {
      throw ValidationError("outcome " + std::to_string(idx) + ": state is not a unit vector");
    }
    for (std::size_t prev = 0; prev < idx; ++prev) {
      if (std::abs(spec.outcomes[prev].state.dot(o.state)) > tol) {
        throw ValidationError("outcomes " + std::to_string(prev) + " and " +
                              std::to_string(idx) + ": states are not orthogonal");
      }
    }
    total += o.p;
    const double sign = o.c == 0 ? 1.0 : -1.0;
    m += (sign * o.p) * (o.state * o.state.adjoint());
  }
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream msg;
    msg << "outcome probabilities sum to " << total << ", expected 1";
    throw ValidationError(msg.str());
  }
  return ValidateGame(m, spec.n, /*strict=*/true, tol);
}

QuantumXorGame GameFromClassicalXor(const RMatrix& r, bool normalize) {
  if (r.rows() != r.cols() || r.rows() == 0) {
    throw ShapeError("classical XOR weights must be a non-empty square matrix");
  }
  if (!r.allFinite() || r.cwiseAbs().maxCoeff() > 1.0) {
    throw ValidationError("classical XOR weights must lie in [-1, 1]");
  }
  const double mass = r.cwiseAbs().sum();
  if (mass == 0.0) throw ValidationError("classical XOR weights are all zero");
  RMatrix w = r;
  if (normalize) {
    w /= mass;
  } else if (std::abs(mass - 1.0) > kGameInputTol) {
    throw ValidationError("classical XOR weights must satisfy sum |R_st| = 1");
  }
  const int n = static_cast<int>(r.rows());
  const linalg::TensorLayout layout{n};
  CMatrix m = CMatrix::Zero(layout.Dim(), layout.Dim());
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      // (e_s e_s^*) (x) (e_t e_t^*) is the unit at ((s,s),(t,t)).
      m(layout.Row(s, t), layout.Col(s, t)) = w(s, t);
    }
  }
  return ValidateGame(m, n, /*strict=*/true);
}

QuantumXorGame ChshGame() {
  RMatrix r(2, 2);
  r << 1.0, 1.0, 1.0, -1.0;
  return GameFromClassicalXor(r / 4.0);
}

OutcomeSpec RandomOutcomeSpec(int n, std::mt19937_64& rng) {
  const int dim = n * n;
  const CMatrix basis = linalg::HaarUnitary(dim, rng);
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution coin(0.5);
  OutcomeSpec spec;
  spec.n = n;
  double total = 0.0;
  for (int i = 0; i < dim; ++i) {
    Outcome o;
    o.state = basis.col(i);
    o.p = expo(rng);
    o.c = coin(rng) ? 1 : 0;
    total += o.p;
    spec.outcomes.push_back(std::move(o));
  }
  for (Outcome& o : spec.outcomes) o.p /= total;
  return spec;
}

QuantumXorGame RandomGame(int n, std::mt19937_64& rng) {
  const int dim = n * n;
  const CMatrix basis = linalg::HaarUnitary(dim, rng);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  Eigen::VectorXd w(dim);
  for (int i = 0; i < dim; ++i) w(i) = weight(rng);
  w /= w.cwiseAbs().sum();
  const CMatrix m = basis * w.cast<Complex>().asDiagonal() * basis.adjoint();
  return ValidateGame(m, n, /*strict=*/true, 1e-10);
}

}  // namespace qxor
