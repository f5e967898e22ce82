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

// Test-only eigenvalue oracle. It does not share any code with the library's
// eigensolver: a complex Hermitian H = A + iB is embedded in the real
// symmetric matrix [[A, -B], [B, A]], whose spectrum is that of H with every
// eigenvalue doubled, and that matrix is diagonalized by cyclic Jacobi
// rotations.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace memchan::testing {

inline std::vector<double> jacobi_symmetric_eigenvalues(
    std::vector<std::vector<double>> a, int max_sweeps = 100) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

/// Eigenvalues (descending) of a complex Hermitian matrix given row-major.
inline std::vector<double> jacobi_hermitian_eigenvalues(
    const std::vector<std::vector<std::complex<double>>>& h) {
  const std::size_t n = h.size();
  std::vector<std::vector<double>> big(2 * n, std::vector<double>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double re = h[r][c].real();
      const double im = h[r][c].imag();
      big[r][c] = re;
      big[r + n][c + n] = re;
      big[r][c + n] = -im;
      big[r + n][c] = im;
    }
  }
  const std::vector<double> doubled = jacobi_symmetric_eigenvalues(big);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < doubled.size(); i += 2) out.push_back(doubled[i]);
  return out;
}

}  // namespace memchan::testing
