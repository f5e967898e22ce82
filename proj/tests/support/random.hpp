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

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "memchan/linalg.hpp"

namespace memchan::testing {

// Every randomized test seeds from here so failures reproduce.
inline constexpr std::uint64_t kTestSeed = 20261015;

inline ComplexMatrix random_complex(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = Complex{normal(rng), normal(rng)};
  }
  return m;
}

/// Random full-rank density matrix G G^dagger / tr.
inline DensityMatrix random_density(std::mt19937_64& rng, int qubits) {
  const Eigen::Index n = Eigen::Index{1} << qubits;
  const ComplexMatrix g = random_complex(rng, n);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Symmetrize away rounding so the Hermiticity check sees an exact adjoint.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(rho);
}

/// Haar-ish random unitary from the QR factorization of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(rng, n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) total += (v = exp1(rng));
  for (double& v : p) v /= total;
  return p;
}

}  // namespace memchan::testing
