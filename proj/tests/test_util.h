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

// Independent reference computations shared by the tests. These use plain
// index loops rather than the library's block and reshape helpers.

#ifndef QXOR_TESTS_TEST_UTIL_H_
#define QXOR_TESTS_TEST_UTIL_H_

#include <cmath>
#include <complex>
#include <filesystem>
#include <string>

#include "qxor/linalg.h"
#include "qxor/strategy.h"

namespace qxor::testing {

// X_{(i,j),(k,l)} = <(U_ij (x) V_kl) psi, psi> by explicit index sums.
inline CMatrix CorrelationOracle(const TensorStrategy& s) {
  const int n = s.n(), da = s.dim_a(), db = s.dim_b();
  CMatrix x = CMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Complex acc = 0.0;
          for (int a = 0; a < da; ++a)
            for (int b = 0; b < db; ++b)
              for (int a2 = 0; a2 < da; ++a2)
                for (int b2 = 0; b2 < db; ++b2) {
                  acc += std::conj(s.psi()(a * db + b)) * s.u()(i * da + a, j * da + a2) *
                         s.v()(k * db + b, l * db + b2) * s.psi()(a2 * db + b2);
                }
          x(i * n + k, j * n + l) = acc;
        }
  return x;
}

// Tr_game(O) as sum_g O[(g,a),(g,b)].
inline CMatrix PartialTraceOracle(const CMatrix& o, int n, int d) {
  CMatrix out = CMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int g = 0; g < n; ++g) out(a, b) += o(g * d + a, g * d + b);
  return out;
}

// Permutation matrix sending index (p, q, r) of an outer x inner x block
// layout to (q, p, r).
inline Eigen::MatrixXd ShufflePermutation(int outer, int inner, int block_dim) {
  const int dim = outer * inner * block_dim;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < outer; ++a)
    for (int b = 0; b < inner; ++b)
      for (int r = 0; r < block_dim; ++r) {
        const int from = (a * inner + b) * block_dim + r;
        const int to = (b * outer + a) * block_dim + r;
        p(to, from) = 1.0;
      }
  return p;
}

inline double MaxDiff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qxor_" + name)).string();
}

}  // namespace qxor::testing

#endif  // QXOR_TESTS_TEST_UTIL_H_
