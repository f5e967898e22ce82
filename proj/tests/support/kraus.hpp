// Copyright 2026 The memchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Literal Kraus-sum evaluation with dense matrix products, used to check the
// library's signed-permutation implementation of the channel map. Weights are
// written out from the two Kraus forms directly rather than via noise_weight.

#include <array>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/linalg.hpp"

namespace memchan::testing {

inline double literal_weight(const PauliProbs& p, double mu,
                             const std::vector<Pauli>& idx) {
  if (idx.size() == 2) {
    // p_{i1} * p_{i2 | i1} with the Markov kernel.
    const double cond = (1.0 - mu) * p[idx[1]] + (idx[0] == idx[1] ? mu : 0.0);
    return p[idx[0]] * cond;
  }
  const bool all_same = idx[0] == idx[1] && idx[1] == idx[2] && idx[2] == idx[3];
  return p[idx[0]] *
         ((1.0 - mu) * p[idx[1]] * p[idx[2]] * p[idx[3]] + (all_same ? mu : 0.0));
}

inline ComplexMatrix word_matrix(int qubits, const std::vector<int>& touched,
                                 const std::vector<Pauli>& word) {
  std::vector<ComplexMatrix> factors(static_cast<std::size_t>(qubits),
                                     pauli(Pauli::kI));
  for (std::size_t k = 0; k < touched.size(); ++k) {
    factors[static_cast<std::size_t>(touched[k] - 1)] = pauli(word[k]);
  }
  ComplexMatrix out = factors[0];
  for (std::size_t q = 1; q < factors.size(); ++q) out = tensor(out, factors[q]);
  return out;
}

inline ComplexMatrix literal_apply(const PauliProbs& p, double mu,
                                   const ComplexMatrix& rho, int qubits,
                                   const std::vector<int>& touched) {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  const std::size_t n = touched.size();
  std::vector<Pauli> word(n);
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t k = 0; k < n; ++k) {
      word[n - 1 - k] = static_cast<Pauli>(c & 3U);
      c >>= 2;
    }
    const double w = literal_weight(p, mu, word);
    if (w == 0.0) continue;
    const ComplexMatrix m = word_matrix(qubits, touched, word);
    out += w * m * rho * m.adjoint();
  }
  return out;
}

}  // namespace memchan::testing
