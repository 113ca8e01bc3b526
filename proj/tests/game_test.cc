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

#include <algorithm>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "qxor/errors.h"
#include "test_util.h"

namespace qxor {
namespace {

using qxor::testing::MaxDiff;

CVector BasisState(int dim, int k) {
  CVector v = CVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

CMatrix Diag(std::initializer_list<double> entries) {
  CMatrix m = CMatrix::Zero(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  int k = 0;
  for (double e : entries) {
    m(k, k) = e;
    ++k;
  }
  return m;
}

TEST(GameFromOutcomesTest, RankOneProjection) {
  OutcomeSpec spec{2, {{BasisState(4, 0), 1.0, 0}}};
  EXPECT_LE(MaxDiff(GameFromOutcomes(spec).matrix(), Diag({1, 0, 0, 0})), 0.0);
  spec.outcomes[0].c = 1;
  EXPECT_LE(MaxDiff(GameFromOutcomes(spec).matrix(), Diag({-1, 0, 0, 0})), 0.0);
}

TEST(GameFromOutcomesTest, ProductBasisWithOneFlippedBit) {
  OutcomeSpec spec{2, {}};
  for (int k = 0; k < 4; ++k) spec.outcomes.push_back({BasisState(4, k), 0.25, k == 3 ? 1 : 0});
  const QuantumXorGame g = GameFromOutcomes(spec);
  EXPECT_LE(MaxDiff(g.matrix(), Diag({0.25, 0.25, 0.25, -0.25})), 1e-15);
  EXPECT_NEAR(linalg::TraceNorm(g.matrix()), 1.0, 1e-14);
}

TEST(GameFromOutcomesTest, RejectsBadProbabilitySum) {
  OutcomeSpec spec{2, {{BasisState(4, 0), 0.5, 0}}};
  EXPECT_THROW(GameFromOutcomes(spec), ValidationError);
}

TEST(GameFromOutcomesTest, RejectsNonUnitState) {
  OutcomeSpec spec{2, {{2.0 * BasisState(4, 0), 1.0, 0}}};
  EXPECT_THROW(GameFromOutcomes(spec), ValidationError);
}

TEST(GameFromOutcomesTest, RejectsNonOrthogonalStates) {
  CVector tilted = (BasisState(4, 0) + BasisState(4, 1)) / std::sqrt(2.0);
  OutcomeSpec spec{2, {{BasisState(4, 0), 0.5, 0}, {tilted, 0.5, 1}}};
  EXPECT_THROW(GameFromOutcomes(spec), ValidationError);
}

TEST(GameFromOutcomesTest, RejectsBadBitAndWrongLength) {
  OutcomeSpec bit{2, {{BasisState(4, 0), 1.0, 2}}};
  EXPECT_THROW(GameFromOutcomes(bit), ValidationError);
  OutcomeSpec length{2, {{BasisState(3, 0), 1.0, 0}}};
  EXPECT_THROW(GameFromOutcomes(length), ShapeError);
}

TEST(GameFromOutcomesTest, TraceNormIsOneForRandomSpecs) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const OutcomeSpec spec = RandomOutcomeSpec(2 + t % 2, rng);
    EXPECT_NEAR(linalg::TraceNorm(GameFromOutcomes(spec).matrix()), 1.0, 1e-10);
  }
}

TEST(GameFromOutcomesTest, InvariantUnderPermutation) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    OutcomeSpec spec = RandomOutcomeSpec(3, rng);
    const CMatrix before = GameFromOutcomes(spec).matrix();
    std::shuffle(spec.outcomes.begin(), spec.outcomes.end(), rng);
    EXPECT_LE(MaxDiff(GameFromOutcomes(spec).matrix(), before), 1e-14);
  }
}

TEST(ValidateGameTest, AcceptsAndRejects) {
  EXPECT_NO_THROW(ValidateGame(Diag({1, 0, 0, 0}), 2, true));
  try {
    ValidateGame(Diag({2, 0, 0, 0}), 2, true);
    FAIL() << "expected trace-norm error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("trace-norm"), std::string::npos);
  }
  CMatrix e12 = CMatrix::Zero(4, 4);
  e12(0, 1) = 1.0;
  try {
    ValidateGame(e12, 2, true);
    FAIL() << "expected self-adjointness error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("self-adjoint"), std::string::npos);
  }
}

TEST(ValidateGameTest, NonStrictAllowsSmallerTraceNorm) {
  EXPECT_THROW(ValidateGame(Diag({0.5, 0, 0, 0}), 2, true), ValidationError);
  const QuantumXorGame g = ValidateGame(Diag({0.5, 0, 0, 0}), 2, false);
  EXPECT_FALSE(g.strict());
  EXPECT_NO_THROW(ValidateGame(CMatrix::Zero(4, 4), 2, false));
}

TEST(ValidateGameTest, RejectsWrongShape) {
  EXPECT_THROW(ValidateGame(CMatrix::Identity(3, 3), 2, false), ShapeError);
}

TEST(ClassicalXorTest, ClosedForms) {
  RMatrix one(1, 1);
  one << 1.0;
  const QuantumXorGame g1 = GameFromClassicalXor(one);
  EXPECT_EQ(g1.n(), 1);
  EXPECT_EQ(g1.matrix()(0, 0), Complex(1.0));

  RMatrix chsh(2, 2);
  chsh << 0.25, 0.25, 0.25, -0.25;
  EXPECT_LE(MaxDiff(GameFromClassicalXor(chsh).matrix(), Diag({0.25, 0.25, 0.25, -0.25})), 0.0);

  RMatrix r(2, 2);
  r << 0.5, 0.0, 0.0, -0.5;
  EXPECT_LE(MaxDiff(GameFromClassicalXor(r).matrix(), Diag({0.5, 0, 0, -0.5})), 0.0);
}

TEST(ClassicalXorTest, OffDiagonalWeightLandsOnLayoutIndex) {
  // R_{0,1} sits at row = col = 0 * n + 1 = 1.
  RMatrix r = RMatrix::Zero(2, 2);
  r(0, 1) = -1.0;
  EXPECT_LE(MaxDiff(GameFromClassicalXor(r).matrix(), Diag({0, -1, 0, 0})), 0.0);
}

TEST(ClassicalXorTest, NormalizeAndErrors) {
  RMatrix r(2, 2);
  r << 1.0, 1.0, 1.0, -1.0;
  EXPECT_THROW(GameFromClassicalXor(r), ValidationError);
  EXPECT_NEAR(linalg::TraceNorm(GameFromClassicalXor(r, true).matrix()), 1.0, 1e-15);
  RMatrix big(1, 1);
  big << 2.0;
  EXPECT_THROW(GameFromClassicalXor(big, true), ValidationError);
  EXPECT_THROW(GameFromClassicalXor(RMatrix::Zero(2, 2), true), ValidationError);
}

TEST(ClassicalXorTest, AlwaysDiagonal) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    RMatrix r(3, 3);
    for (int k = 0; k < 9; ++k) r(k / 3, k % 3) = unif(rng);
    CMatrix m = GameFromClassicalXor(r, true).matrix();
    m.diagonal().setZero();
    EXPECT_EQ(m.cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(ChshGameTest, MatrixAndNorms) {
  const QuantumXorGame g = ChshGame();
  EXPECT_EQ(g.n(), 2);
  EXPECT_LE(MaxDiff(g.matrix(), Diag({0.25, 0.25, 0.25, -0.25})), 0.0);
  EXPECT_NEAR(linalg::TraceNorm(g.matrix()), 1.0, 1e-15);
  EXPECT_EQ(linalg::HermitianViolation(g.matrix()), 0.0);
  EXPECT_LE(MaxDiff(g.Negated().matrix(), -g.matrix()), 0.0);
}

TEST(RandomGameTest, ValidAndDeterministic) {
  std::mt19937_64 a(99), b(99);
  const QuantumXorGame g = RandomGame(3, a);
  EXPECT_NEAR(linalg::TraceNorm(g.matrix()), 1.0, 1e-10);
  EXPECT_LE(linalg::HermitianViolation(g.matrix()), 1e-12);
  EXPECT_EQ(g.matrix(), RandomGame(3, b).matrix());
}

}  // namespace
}  // namespace qxor
