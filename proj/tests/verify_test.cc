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
#include <set>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "qxor/errors.h"

namespace qxor::verify {
namespace {

const PropertyResult& Find(const VerifySummary& summary, const std::string& name) {
  for (const PropertyResult& r : summary.results)
    if (r.name == name) return r;
  throw std::runtime_error("no property " + name);
}

TEST(VerifyTest, NamesAreUniqueAndRegistered) {
  const std::vector<std::string> names = PropertyNames();
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  for (const char* expected : {"dilation.round_trip_tensor", "dilation.round_trip_commuting",
                               "strategy.dual_bias_agreement", "optimize.negation_symmetry"})
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
}

TEST(VerifyTest, SmallRunPassesAndIsDeterministic) {
  VerifyOptions options;
  options.trials = 5;
  const VerifySummary a = RunAll(options);
  EXPECT_TRUE(a.all_passed);
  const VerifySummary b = RunAll(options);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t k = 0; k < a.results.size(); ++k)
    EXPECT_EQ(a.results[k].worst, b.results[k].worst) << a.results[k].name;
}

TEST(VerifyTest, OptionValidation) {
  VerifyOptions options;
  options.trials = 0;
  EXPECT_THROW(options.Validate(), ValidationError);
  options = VerifyOptions{};
  options.dims.clear();
  EXPECT_THROW(options.Validate(), ValidationError);
}

// Mutation check: flipping the sign of the lower-right sub-block of every
// dilation block must be caught by the round-trip properties.
TEST(VerifyTest, NegatedHalmosBlockFailsRoundTrip) {
  VerifyOptions options;
  options.trials = 10;
  options.dilate = [](const CMatrix& s, int n, int bd) {
    CMatrix h = dilation::HalmosDilation(s, n, bd);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h.block(i * 2 * bd + bd, j * 2 * bd + bd, bd, bd) *= -1.0;
    return h;
  };
  const VerifySummary summary = RunAll(options);
  EXPECT_FALSE(summary.all_passed);
  EXPECT_FALSE(Find(summary, "dilation.round_trip_tensor").passed);
  EXPECT_FALSE(Find(summary, "dilation.round_trip_commuting").passed);
  EXPECT_FALSE(Find(summary, "dilation.halmos_is_unitary").passed);
  EXPECT_TRUE(Find(summary, "strategy.dual_bias_agreement").passed);
}

}  // namespace
}  // namespace qxor::verify
