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

#include "qxor/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <random>

#include "qxor/errors.h"
#include "qxor/game.h"
#include "qxor/linalg.h"
#include "qxor/optimize.h"
#include "qxor/strategy.h"

namespace qxor::verify {
namespace {

constexpr double kFailed = std::numeric_limits<double>::infinity();

struct Trial {
  int index = 0;
  int n = 2;
  int dim_a = 1;
  int dim_b = 1;
  std::mt19937_64* rng = nullptr;
  const VerifyOptions* options = nullptr;
};

// Returns the violation observed in one trial.
using Check = std::function<double(Trial&)>;

struct Property {
  const char* name;
  double threshold;
  // Cap on the number of trials; 0 runs options.trials.
  int max_trials;
  Check check;
};

double Distance(const CMatrix& a, const CMatrix& b) { return linalg::MaxAbs(a - b); }

double Flag(bool ok) { return ok ? 0.0 : kFailed; }

// Small commuting dimension d = dA * dB <= 4 derived from the trial.
CommutingStrategy TrialCommuting(Trial& t) {
  const int da = std::min(t.dim_a, 4);
  const int db = da * 2 <= 4 && t.index % 2 == 1 ? 2 : 1;
  return RandomCommutingStrategy(t.n, da, db, *t.rng);
}

CMatrix RandomContraction(int dim, std::mt19937_64& rng) {
  const CMatrix g = linalg::GinibreMatrix(dim, dim, rng);
  std::uniform_real_distribution<double> radius(0.1, 1.0);
  return g * (radius(rng) / linalg::OperatorNorm(g));
}

// Blockwise direct sum: block (i, j) of the result is U_ij (+) G_ij, with
// U in blocks of d and G in blocks of k.
CMatrix PadBlocks(const CMatrix& u, const CMatrix& g, int n, int d, int k) {
  return linalg::AssembleBlocks(n, d + k, [&](int i, int j) {
    CMatrix b = CMatrix::Zero(d + k, d + k);
    b.topLeftCorner(d, d) = linalg::Block(u, d, i, j);
    b.bottomRightCorner(k, k) = linalg::Block(g, k, i, j);
    return b;
  });
}

// The same correlation realised with one extra, unpopulated dimension per
// party carrying a random unitary. The corner contractions S, T of a padded
// embedding are no longer unitary, so extraction has to use the defect blocks
// of the dilation.
TensorStrategy PadTensor(const TensorStrategy& s, std::mt19937_64& rng) {
  const int n = s.n(), da = s.dim_a(), db = s.dim_b();
  CVector psi = CVector::Zero((da + 1) * (db + 1));
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b) psi(a * (db + 1) + b) = s.psi()(a * db + b);
  return TensorStrategy(n, da + 1, db + 1, PadBlocks(s.u(), linalg::HaarUnitary(n, rng), n, da, 1),
                        PadBlocks(s.v(), linalg::HaarUnitary(n, rng), n, db, 1), psi);
}

// Commuting version: Bob's padding is the identity so commutation survives.
CommutingStrategy PadCommuting(const CommutingStrategy& s, std::mt19937_64& rng) {
  const int n = s.n(), d = s.dim();
  CVector psi = CVector::Zero(d + 1);
  psi.head(d) = s.psi();
  return CommutingStrategy(n, d + 1, PadBlocks(s.u(), linalg::HaarUnitary(n, rng), n, d, 1),
                           PadBlocks(s.v(), CMatrix::Identity(n, n), n, d, 1), psi);
}

double CorrelationBoundViolation(const Correlation& x) {
  const double entry = linalg::MaxAbs(x.x) - 1.0;
  const double op = linalg::OperatorNorm(x.x) - 1.0;
  return std::max({0.0, entry, op});
}

std::vector<Property> Registry() {
  std::vector<Property> props;

  props.push_back({"linalg.polar_attains_trace_norm", 1e-9, 0, [](Trial& t) {
                     const int dim = t.n * t.dim_a;
                     const CMatrix a = linalg::GinibreMatrix(dim, dim, *t.rng);
                     const double norm = linalg::TraceNorm(a);
                     const double attained = (linalg::PolarFactor(a) * a).trace().real();
                     double worst = std::abs(attained - norm);
                     for (int q = 0; q < 5; ++q) {
                       const double other = (linalg::HaarUnitary(dim, *t.rng) * a).trace().real();
                       if (other > attained + 1e-12) worst = kFailed;
                     }
                     return worst;
                   }});

  props.push_back({"linalg.hermitian_sqrt_squares_back", 1e-10, 0, [](Trial& t) {
                     const int dim = 1 + t.index % 16;
                     const CMatrix g = linalg::GinibreMatrix(dim, dim, *t.rng);
                     const CMatrix p = g * g.adjoint() / static_cast<double>(dim);
                     const CMatrix q = linalg::HermitianSqrt(p);
                     return std::max(Distance(q * q, p), linalg::HermitianViolation(q));
                   }});

  props.push_back({"linalg.partial_trace_linear_trace_preserving", 1e-12, 0, [](Trial& t) {
                     const int ng = t.n;
                     const int env = t.dim_a;
                     const int dim = ng * env;
                     const CMatrix a = linalg::GinibreMatrix(dim, dim, *t.rng);
                     const CMatrix b = linalg::GinibreMatrix(dim, dim, *t.rng);
                     const Complex alpha(0.3, -1.2);
                     const CMatrix lhs = linalg::PartialTraceGame(a + alpha * b, ng, env);
                     const CMatrix rhs = linalg::PartialTraceGame(a, ng, env) +
                                         alpha * linalg::PartialTraceGame(b, ng, env);
                     const double trace_gap =
                         std::abs(linalg::PartialTraceGame(a, ng, env).trace() - a.trace());
                     return std::max(Distance(lhs, rhs), trace_gap);
                   }});

  props.push_back({"linalg.shuffle_preserves_structure", 1e-10, 0, [](Trial& t) {
                     const int outer = 2;
                     const int inner = t.n;
                     const int bd = t.dim_a;
                     const int dim = outer * inner * bd;
                     const CMatrix u = linalg::HaarUnitary(dim, *t.rng);
                     const CMatrix g = linalg::GinibreMatrix(dim, dim, *t.rng);
                     const CMatrix h = g + g.adjoint();
                     const CMatrix su = linalg::CanonicalShuffle(u, outer, inner, bd);
                     const CMatrix sh = linalg::CanonicalShuffle(h, outer, inner, bd);
                     const CMatrix gram = su.adjoint() * su;
                     return std::max({Distance(gram, CMatrix::Identity(dim, dim)),
                                      linalg::HermitianViolation(sh),
                                      Distance(linalg::CanonicalShuffle(su, inner, outer, bd), u)});
                   }});

  props.push_back({"game.outcome_trace_norm_is_one", 1e-10, 0, [](Trial& t) {
                     const QuantumXorGame g = GameFromOutcomes(RandomOutcomeSpec(t.n, *t.rng));
                     return std::abs(linalg::TraceNorm(g.matrix()) - 1.0);
                   }});

  props.push_back({"game.outcome_order_invariance", 1e-14, 0, [](Trial& t) {
                     OutcomeSpec spec = RandomOutcomeSpec(t.n, *t.rng);
                     const CMatrix m1 = GameFromOutcomes(spec).matrix();
                     std::shuffle(spec.outcomes.begin(), spec.outcomes.end(), *t.rng);
                     return Distance(GameFromOutcomes(spec).matrix(), m1);
                   }});

  props.push_back({"game.classical_is_diagonal", 0.0, 0, [](Trial& t) {
                     std::uniform_real_distribution<double> w(-1.0, 1.0);
                     RMatrix r(t.n, t.n);
                     for (int s = 0; s < t.n; ++s) {
                       for (int q = 0; q < t.n; ++q) r(s, q) = w(*t.rng);
                     }
                     const CMatrix m = GameFromClassicalXor(r, true).matrix();
                     CMatrix off = m;
                     off.diagonal().setZero();
                     return linalg::MaxAbs(off);
                   }});

  props.push_back({"strategy.correlation_is_contractive", 1e-9, 0, [](Trial& t) {
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const CommutingStrategy c = TrialCommuting(t);
                     return std::max(CorrelationBoundViolation(CorrelationTensor(s)),
                                     CorrelationBoundViolation(CorrelationCommuting(c)));
                   }});

  props.push_back({"strategy.adjoint_realizes_x_star", 1e-12, 0, [](Trial& t) {
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const CommutingStrategy c = TrialCommuting(t);
                     return std::max(
                         Distance(CorrelationTensor(AdjointStrategy(s)).x,
                                  CorrelationTensor(s).x.adjoint()),
                         Distance(CorrelationCommuting(AdjointStrategy(c)).x,
                                  CorrelationCommuting(c).x.adjoint()));
                   }});

  props.push_back({"strategy.phase_scales_correlation", 1e-12, 0, [](Trial& t) {
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
                     const Complex lambda = std::polar(1.0, angle(*t.rng));
                     return Distance(CorrelationTensor(ScaleByPhase(s, lambda)).x,
                                     lambda * CorrelationTensor(s).x);
                   }});

  props.push_back({"strategy.dual_bias_agreement", 1e-10, 0, [](Trial& t) {
                     const QuantumXorGame g = RandomGame(t.n, *t.rng);
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     return std::abs(BiasDirect(g, s) - BiasTrace(g, CorrelationTensor(s)));
                   }});

  props.push_back({"strategy.commuting_product_agreement", 1e-12, 0, [](Trial& t) {
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     return Distance(CorrelationCommuting(CommutingFromTensor(s)).x,
                                     CorrelationTensor(s).x);
                   }});

  props.push_back({"strategy.bias_within_unit_disk", 1e-9, 0, [](Trial& t) {
                     const QuantumXorGame g = RandomGame(t.n, *t.rng);
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const CommutingStrategy c = TrialCommuting(t);
                     const double worst =
                         std::max(std::abs(BiasTrace(g, CorrelationTensor(s))),
                                  std::abs(BiasTrace(g, CorrelationCommuting(c))));
                     return std::max(0.0, worst - 1.0);
                   }});

  props.push_back({"dilation.observable_tensor", 1e-11, 0, [](Trial& t) {
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const TensorStrategy o = dilation::ObservableDilationTensor(s);
                     const CMatrix x = CorrelationTensor(s).x;
                     const double err =
                         Distance(CorrelationTensor(o).x, 0.5 * (x + x.adjoint()));
                     return std::max(err, Flag(IsObservableStrategy(o, 1e-9)));
                   }});

  props.push_back({"dilation.observable_commuting", 1e-11, 0, [](Trial& t) {
                     const CommutingStrategy s = TrialCommuting(t);
                     const CommutingStrategy o = dilation::ObservableDilationCommuting(s);
                     const CMatrix x = CorrelationCommuting(s).x;
                     const double err =
                         Distance(CorrelationCommuting(o).x, 0.5 * (x + x.adjoint()));
                     return std::max({err, Flag(IsObservableStrategy(o, 1e-9)),
                                      Flag(CheckCommuting(o) <= 1e-10)});
                   }});

  props.push_back({"dilation.symmetrize_takes_real_part", 1e-12, 0, [](Trial& t) {
                     const QuantumXorGame g = RandomGame(t.n, *t.rng);
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const Complex before = BiasTrace(g, CorrelationTensor(s));
                     const Complex after =
                         BiasTrace(g, CorrelationTensor(dilation::SymmetrizeStrategy(s)));
                     return std::abs(after - Complex(before.real(), 0.0));
                   }});

  props.push_back({"dilation.embedding_corner_pattern", 1e-11, 0, [](Trial& t) {
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const auto emb = dilation::EmbedSelfAdjoint(s);
                     const Correlation& w = emb.witness.embedded;
                     return std::max({dilation::CornerPatternViolation(w),
                                      Distance(dilation::CornerBlock(w).x, emb.witness.original.x),
                                      linalg::HermitianViolation(w.x)});
                   }});

  props.push_back({"dilation.round_trip_tensor", 1e-10, 0, [](Trial& t) {
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const auto emb = dilation::EmbedSelfAdjoint(s);
                     const CMatrix x = CorrelationTensor(s).x;
                     const TensorStrategy back =
                         dilation::ExtractFromEmbeddingTensor(emb.strategy, t.options->dilate);
                     const TensorStrategy padded = dilation::ExtractFromEmbeddingTensor(
                         PadTensor(emb.strategy, *t.rng), t.options->dilate);
                     return std::max(Distance(CorrelationTensor(back).x, x),
                                     Distance(CorrelationTensor(padded).x, x));
                   }});

  props.push_back({"dilation.round_trip_commuting", 1e-9, 0, [](Trial& t) {
                     const CommutingStrategy s = TrialCommuting(t);
                     const auto emb = dilation::EmbedSelfAdjoint(s);
                     const CMatrix x = CorrelationCommuting(s).x;
                     const CommutingStrategy back =
                         dilation::ExtractFromEmbeddingCommuting(emb.strategy, t.options->dilate);
                     const CommutingStrategy padded = dilation::ExtractFromEmbeddingCommuting(
                         PadCommuting(emb.strategy, *t.rng), t.options->dilate);
                     return std::max({Distance(CorrelationCommuting(back).x, x),
                                      Distance(CorrelationCommuting(padded).x, x),
                                      CheckCommuting(back), CheckCommuting(padded)});
                   }});

  props.push_back({"dilation.halmos_is_unitary", 1e-9, 0, [](Trial& t) {
                     const int n = t.n;
                     const int bd = t.dim_a;
                     const CMatrix s = RandomContraction(n * bd, *t.rng);
                     const CMatrix h = t.options->dilate(s, n, bd);
                     const int dim = 2 * n * bd;
                     double corner = 0.0;
                     for (int i = 0; i < n; ++i) {
                       for (int j = 0; j < n; ++j) {
                         corner = std::max(corner, Distance(linalg::Block(h, 2 * bd, i, j)
                                                                .topLeftCorner(bd, bd),
                                                            linalg::Block(s, bd, i, j)));
                       }
                     }
                     return std::max(Distance(h.adjoint() * h, CMatrix::Identity(dim, dim)),
                                     corner);
                   }});

  props.push_back({"optimize.update_matrix_is_exact", 1e-12, 0, [](Trial& t) {
                     const QuantumXorGame g = RandomGame(t.n, *t.rng);
                     const TensorStrategy s =
                         RandomTensorStrategy(t.n, t.dim_a, t.dim_b, *t.rng);
                     const CMatrix a = optimize::AssembleUpdateMatrix(g, optimize::Player::kAlice, s);
                     const CMatrix b = optimize::AssembleUpdateMatrix(g, optimize::Player::kBob, s);
                     const CMatrix u = linalg::HaarUnitary(t.n * t.dim_a, *t.rng);
                     const CMatrix v = linalg::HaarUnitary(t.n * t.dim_b, *t.rng);
                     const TensorStrategy su(t.n, t.dim_a, t.dim_b, u, s.v(), s.psi());
                     const TensorStrategy sv(t.n, t.dim_a, t.dim_b, s.u(), v, s.psi());
                     return std::max(
                         std::abs((u * a).trace() - BiasTrace(g, CorrelationTensor(su))),
                         std::abs((v * b).trace() - BiasTrace(g, CorrelationTensor(sv))));
                   }});

  props.push_back({"optimize.seesaw_monotone_sound_bounded", 1e-10, 0, [](Trial& t) {
                     const QuantumXorGame g = RandomGame(t.n, *t.rng);
                     optimize::SeesawConfig config;
                     config.dim_a = t.dim_a;
                     config.dim_b = t.dim_b;
                     config.restarts = 2;
                     config.max_sweeps = 40;
                     config.seed = (*t.rng)();
                     const optimize::SeesawResult r = optimize::Seesaw(g, config);
                     double worst = 0.0;
                     for (const auto& trace : r.traces) {
                       if (!optimize::IsMonotone(trace)) worst = kFailed;
                     }
                     if (r.best_bias > 1.0 + 1e-9) worst = kFailed;
                     const Complex check = BiasTrace(g, CorrelationTensor(r.best_strategy));
                     worst = std::max(worst, std::abs(check - Complex(r.best_bias, 0.0)));
                     const Complex sym = BiasTrace(
                         g, CorrelationTensor(dilation::SymmetrizeStrategy(r.best_strategy)));
                     return std::max(worst, std::abs(sym - Complex(r.best_bias, 0.0)));
                   }});

  props.push_back({"optimize.negation_symmetry", 1e-6, 20, [](Trial& t) {
                     const QuantumXorGame g = RandomGame(t.n, *t.rng);
                     optimize::SeesawConfig config;
                     config.dim_a = t.dim_a;
                     config.dim_b = t.dim_b;
                     config.restarts = 2;
                     config.max_sweeps = 60;
                     config.seed = (*t.rng)();
                     return std::abs(optimize::Seesaw(g, config).best_bias -
                                     optimize::Seesaw(g.Negated(), config).best_bias);
                   }});

  return props;
}

PropertyResult RunProperty(const Property& prop, const VerifyOptions& options,
                           std::uint64_t stream) {
  PropertyResult result;
  result.name = prop.name;
  result.threshold = prop.threshold;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(stream);
  const int trials =
      prop.max_trials > 0 ? std::min(prop.max_trials, options.trials) : options.trials;
  const int ndims = static_cast<int>(options.dims.size());
  for (int i = 0; i < trials; ++i) {
    Trial trial;
    trial.index = i;
    trial.n = options.n;
    trial.dim_a = options.dims[i % ndims];
    trial.dim_b = options.dims[(i / ndims) % ndims];
    trial.rng = &rng;
    trial.options = &options;
    double violation = 0.0;
    try {
      violation = prop.check(trial);
    } catch (const std::exception& e) {
      violation = kFailed;
      if (result.note.empty()) result.note = e.what();
    }
    if (!(violation <= result.worst)) result.worst = violation;
    ++result.trials;
  }
  result.passed = result.worst <= prop.threshold;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

void VerifyOptions::Validate() const {
  if (n < 1) throw ValidationError("verify: n must be >= 1");
  if (dims.empty()) throw ValidationError("verify: dimension list is empty");
  for (const int d : dims) {
    if (d < 1) throw ValidationError("verify: dimensions must be >= 1");
  }
  if (trials < 1) throw ValidationError("verify: trials must be >= 1");
  if (!dilate) throw ValidationError("verify: no dilation supplied");
}

std::vector<std::string> PropertyNames() {
  std::vector<std::string> names;
  for (const Property& p : Registry()) names.emplace_back(p.name);
  return names;
}

VerifySummary RunAll(const VerifyOptions& options) {
  options.Validate();
  const auto start = std::chrono::steady_clock::now();
  VerifySummary summary;
  summary.all_passed = true;
  const std::vector<Property> props = Registry();
  for (std::size_t i = 0; i < props.size(); ++i) {
    summary.results.push_back(
        RunProperty(props[i], options, optimize::RestartSeed(options.seed, static_cast<int>(i))));
    summary.all_passed = summary.all_passed && summary.results.back().passed;
  }
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace qxor::verify
