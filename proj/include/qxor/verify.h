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

// Randomised property suite behind `qxor verify`.

#ifndef QXOR_VERIFY_H_
#define QXOR_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qxor/dilation.h"

namespace qxor::verify {

struct VerifyOptions {
  // Game size for the strategy-level properties.
  int n = 2;
  // Local dimensions cycled through by the trials.
  std::vector<int> dims = {1, 2, 3};
  int trials = 100;
  std::uint64_t seed = 42;
  // Contraction dilation used by the round-trip properties. Replaceable so
  // that tests can check the suite catches a broken dilation.
  dilation::ContractionDilator dilate = [](const CMatrix& s, int n, int block_dim) {
    return dilation::HalmosDilation(s, n, block_dim);
  };

  void Validate() const;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  // Worst violation observed over all trials (infinity when a trial threw).
  double worst = 0.0;
  double threshold = 0.0;
  int trials = 0;
  double seconds = 0.0;
  std::string note;
};

struct VerifySummary {
  std::vector<PropertyResult> results;
  bool all_passed = false;
  double seconds = 0.0;
};

std::vector<std::string> PropertyNames();

VerifySummary RunAll(const VerifyOptions& options);

}  // namespace qxor::verify

#endif  // QXOR_VERIFY_H_
