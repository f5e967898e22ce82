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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace memchan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Qubit ordering is big-endian throughout: in a register of q qubits, qubit
// position 1 is the most significant bit of the basis index and position q
// the least significant. Positions are 1-based.
std::size_t bit_for_position(int position, int qubit_count);

enum class Pauli : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

inline constexpr Pauli kAllPaulis[] = {Pauli::kI, Pauli::kX, Pauli::kY,
                                       Pauli::kZ};

char to_char(Pauli p);

/// Returns the 2x2 identity or the corresponding Pauli matrix.
ComplexMatrix pauli(Pauli index);

ComplexMatrix identity(std::size_t dim);

/// Kronecker product; the left operand occupies the most significant index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// A normalized state vector on 2^q amplitudes.
class PureState {
 public:
  /// Takes amplitudes that are already normalized (within 1e-12) and rejects
  /// anything else with kNotNormalized.
  explicit PureState(ComplexVector amplitudes);

  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static PureState normalized(ComplexVector amplitudes);

  /// Computational basis state |index> on `qubit_count` qubits.
  static PureState basis(int qubit_count, std::size_t index);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(amplitudes_.size());
  }
  int qubit_count() const noexcept;

  /// <this|other>
  Complex inner(const PureState& other) const;

 private:
  ComplexVector amplitudes_;
};

PureState tensor(const PureState& a, const PureState& b);

/// Hermitian, unit-trace operator on 2^q dimensions.
class DensityMatrix {
 public:
  /// Validates Hermiticity (max |m - m^dagger| <= 1e-10) and unit trace
  /// (within 1e-10).
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix from_pure(const PureState& state);
  static DensityMatrix maximally_mixed(int qubit_count);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(matrix_.rows());
  }
  int qubit_count() const noexcept;

 private:
  ComplexMatrix matrix_;
};

/// Traces out every qubit not listed in `keep` (1-based positions). The kept
/// qubits retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Eigenvalues of a density operator, sorted descending.
class Spectrum {
 public:
  Spectrum() = default;

  /// Clamps values within 1e-12 of zero to exactly zero, rejects anything
  /// more negative (kNotPositiveSemidefinite) and any total differing from 1
  /// by more than 1e-10 (kNotUnitTrace), then sorts descending.
  static Spectrum from_values(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sum() const noexcept;

  /// Copy padded with zeros up to `n` entries (no-op if already that long).
  Spectrum padded(std::size_t n) const;

 private:
  std::vector<double> values_;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kClampTolerance = 1e-12;

/// Largest entrywise |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

Spectrum hermitian_spectrum(const ComplexMatrix& m);
Spectrum hermitian_spectrum(const DensityMatrix& rho);

/// Von Neumann entropy in bits, with 0 log 0 = 0.
double entropy_bits(const Spectrum& s);

/// Shannon entropy in bits of an arbitrary nonnegative list (no sum check).
double shannon_bits(std::span<const double> probabilities);

}  // namespace memchan
