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

#include "qxor/optimize.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

#include "qxor/errors.h"

namespace qxor::optimize {
namespace {

CMatrix StateMatrix(const TensorStrategy& s) {
  CMatrix psi(s.dim_a(), s.dim_b());
  for (int a = 0; a < s.dim_a(); ++a) {
    for (int b = 0; b < s.dim_b(); ++b) psi(a, b) = s.psi()(a * s.dim_b() + b);
  }
  return psi;
}

double ReBias(const QuantumXorGame& g, const TensorStrategy& s) {
  return BiasTrace(g, CorrelationTensor(s)).real();
}

Complex Bias(const QuantumXorGame& g, const TensorStrategy& s) {
  return BiasTrace(g, CorrelationTensor(s));
}

RestartTrace RunRestart(const QuantumXorGame& g, const SeesawConfig& config, int restart,
                        std::optional<TensorStrategy>& final_strategy) {
  std::mt19937_64 rng(RestartSeed(config.seed, restart));
  TensorStrategy s = RandomTensorStrategy(g.n(), config.dim_a, config.dim_b, rng);
  RestartTrace trace;
  trace.restart = restart;
  for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
    s = PhaseAdjust(g, s);
    const double start = ReBias(g, s);
    s = UpdatePlayer(g, s, Player::kAlice);
    trace.records.push_back({restart, sweep, Stage::kAlice, Bias(g, s)});
    s = UpdatePlayer(g, s, Player::kBob);
    trace.records.push_back({restart, sweep, Stage::kBob, Bias(g, s)});
    s = UpdateState(g, s);
    const Complex after = Bias(g, s);
    trace.records.push_back({restart, sweep, Stage::kState, after});
    trace.sweeps = sweep + 1;
    if (after.real() - start < config.tol) {
      trace.converged = true;
      break;
    }
  }
  s = PhaseAdjust(g, s);
  trace.final_value = Bias(g, s);
  trace.final_bias = trace.final_value.real();
  final_strategy.emplace(std::move(s));
  return trace;
}

}  // namespace

const char* StageName(Stage stage) {
  switch (stage) {
    case Stage::kAlice:
      return "alice";
    case Stage::kBob:
      return "bob";
    case Stage::kState:
      return "state";
  }
  return "unknown";
}

void SeesawConfig::Validate() const {
  if (dim_a < 1 || dim_b < 1) throw ValidationError("local dimensions must be >= 1");
  if (restarts < 1) throw ValidationError("restarts must be >= 1");
  if (max_sweeps < 1) throw ValidationError("max sweeps must be >= 1");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be > 0");
  if (threads < 0) throw ValidationError("thread count must be >= 0");
}

CMatrix AssembleUpdateMatrix(const QuantumXorGame& g, Player free_side, const TensorStrategy& s) {
  if (g.n() != s.n()) throw ShapeError("game and strategy sizes differ");
  const int n = s.n();
  const CMatrix& m = g.matrix();
  const linalg::TensorLayout layout{n};
  const CMatrix psi = StateMatrix(s);
  // Tr(M X) = sum M[(j,l),(i,k)] X_{(i,j),(k,l)}. Freeing Alice, block (j, i)
  // of A collects sum_{k,l} M[(j,l),(i,k)] Psi V_kl^T Psi^*; freeing Bob,
  // block (l, k) collects sum_{i,j} M[(j,l),(i,k)] Psi^T U_ij^T conj(Psi).
  if (free_side == Player::kAlice) {
    const int d = s.dim_a();
    CMatrix a = CMatrix::Zero(n * d, n * d);
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        const CMatrix reduced = psi * s.VBlock(k, l).transpose() * psi.adjoint();
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            a.block(j * d, i * d, d, d) += m(layout.Row(j, l), layout.Col(i, k)) * reduced;
          }
        }
      }
    }
    return a;
  }
  const int d = s.dim_b();
  CMatrix a = CMatrix::Zero(n * d, n * d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CMatrix reduced = psi.transpose() * s.UBlock(i, j).transpose() * psi.conjugate();
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          a.block(l * d, k * d, d, d) += m(layout.Row(j, l), layout.Col(i, k)) * reduced;
        }
      }
    }
  }
  return a;
}

CMatrix StateOperator(const QuantumXorGame& g, const TensorStrategy& s) {
  if (g.n() != s.n()) throw ShapeError("game and strategy sizes differ");
  const int n = s.n();
  const CMatrix& m = g.matrix();
  const linalg::TensorLayout layout{n};
  const int env = s.dim_a() * s.dim_b();
  CMatrix k_op = CMatrix::Zero(env, env);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CMatrix ub = s.UBlock(i, j);
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Complex coeff = m(layout.Row(j, l), layout.Col(i, k));
          if (coeff == Complex(0.0, 0.0)) continue;
          k_op += coeff * linalg::Kron(ub, s.VBlock(k, l));
        }
      }
    }
  }
  return k_op;
}

TensorStrategy UpdatePlayer(const QuantumXorGame& g, const TensorStrategy& s, Player side) {
  const CMatrix w = linalg::PolarFactor(AssembleUpdateMatrix(g, side, s));
  if (side == Player::kAlice) {
    return TensorStrategy(s.n(), s.dim_a(), s.dim_b(), w, s.v(), s.psi());
  }
  return TensorStrategy(s.n(), s.dim_a(), s.dim_b(), s.u(), w, s.psi());
}

TensorStrategy UpdateState(const QuantumXorGame& g, const TensorStrategy& s) {
  const CMatrix k_op = StateOperator(g, s);
  const CMatrix herm = 0.5 * (k_op + k_op.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm);
  if (eig.info() != Eigen::Success) throw NumericalError("UpdateState: eigensolver failed");
  const Eigen::VectorXd& values = eig.eigenvalues();
  const Eigen::Index last = values.size() - 1;
  const double top = values(last);
  const double current = s.psi().dot(herm * s.psi()).real();
  const double tie = 1e-14 * std::max(1.0, std::abs(top));
  if (current >= top - tie) return s;
  Eigen::Index pick = last;
  while (pick > 0 && values(pick - 1) >= top - tie) --pick;
  CVector psi = eig.eigenvectors().col(pick);
  psi /= psi.norm();
  return TensorStrategy(s.n(), s.dim_a(), s.dim_b(), s.u(), s.v(), std::move(psi));
}

std::uint64_t RestartSeed(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), 0x71786f72u};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

SeesawResult Seesaw(const QuantumXorGame& g, const SeesawConfig& config) {
  config.Validate();
  const auto start = std::chrono::steady_clock::now();
  const int restarts = config.restarts;
  std::vector<RestartTrace> traces(restarts);
  std::vector<std::optional<TensorStrategy>> finals(restarts);

  int workers = config.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency())
                                    : config.threads;
  workers = std::clamp(workers, 1, restarts);
  std::atomic<int> next{0};
  const auto work = [&] {
    for (int r = next++; r < restarts; r = next++) {
      traces[r] = RunRestart(g, config, r, finals[r]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  int best = 0;
  for (int r = 1; r < restarts; ++r) {
    if (traces[r].final_bias > traces[best].final_bias) best = r;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return SeesawResult{traces[best].final_bias, best, std::move(*finals[best]),
                      std::move(traces), elapsed};
}

std::vector<LadderRow> DimensionLadder(const QuantumXorGame& g, const std::vector<int>& dims,
                                       const SeesawConfig& config) {
  if (dims.empty()) throw ValidationError("dimension list is empty");
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] <= dims[i - 1]) throw ValidationError("dimension list must be increasing");
  }
  std::vector<LadderRow> rows;
  double best_so_far = -1.0;
  for (const int d : dims) {
    SeesawConfig at = config;
    at.dim_a = d;
    at.dim_b = d;
    const SeesawResult result = Seesaw(g, at);
    rows.push_back({d, result.best_bias, result.best_bias < best_so_far - 1e-9});
    best_so_far = std::max(best_so_far, result.best_bias);
  }
  return rows;
}

bool IsMonotone(const RestartTrace& trace, double slack) {
  for (std::size_t i = 1; i < trace.records.size(); ++i) {
    if (trace.records[i].bias.real() < trace.records[i - 1].bias.real() - slack) return false;
  }
  return true;
}

}  // namespace qxor::optimize
