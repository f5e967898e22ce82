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

#include "memchan/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "memchan/errors.hpp"

namespace memchan {
namespace {

constexpr double kStateNormTolerance = 1e-12;
constexpr std::size_t kMaxDim = 256;

int log2_dim(std::size_t dim, const char* what) {
  if (dim == 0 || !std::has_single_bit(dim) || dim > kMaxDim) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " dimension " + std::to_string(dim) +
                    " is not a power of two in [1, 256]");
  }
  return std::countr_zero(dim);
}

}  // namespace

std::size_t bit_for_position(int position, int qubit_count) {
  return static_cast<std::size_t>(qubit_count - position);
}

char to_char(Pauli p) {
  switch (p) {
    case Pauli::kI: return 'I';
    case Pauli::kX: return 'X';
    case Pauli::kY: return 'Y';
    case Pauli::kZ: return 'Z';
  }
  return '?';
}

ComplexMatrix pauli(Pauli index) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  const Complex i{0.0, 1.0};
  switch (index) {
    case Pauli::kI:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::kX:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::kY:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case Pauli::kZ:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(n, n);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  log2_dim(dim(), "state");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kStateNormTolerance) {
    throw Error(ErrorKind::kNotNormalized,
                "state has squared norm " + std::to_string(norm2));
  }
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw Error(ErrorKind::kNotNormalized, "cannot normalize the zero vector");
  }
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(int qubit_count, std::size_t index) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (index >= dim) {
    throw Error(ErrorKind::kInvalidArgument, "basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

int PureState::qubit_count() const noexcept {
  return std::countr_zero(dim());
}

Complex PureState::inner(const PureState& other) const {
  return amplitudes_.dot(other.amplitudes_);
}

PureState tensor(const PureState& a, const PureState& b) {
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  ComplexVector out(va.size() * vb.size());
  for (Eigen::Index i = 0; i < va.size(); ++i) {
    out.segment(i * vb.size(), vb.size()) = va(i) * vb;
  }
  return PureState::normalized(std::move(out));
}

// ---------------------------------------------------------------------------
// DensityMatrix

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "density matrix is not square");
  }
  log2_dim(dim(), "density matrix");
  const double defect = hermiticity_defect(matrix_);
  if (defect > kHermitianTolerance) {
    throw Error(ErrorKind::kNotHermitian,
                "max |m - m^dagger| = " + std::to_string(defect));
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTolerance) {
    throw Error(ErrorKind::kNotUnitTrace,
                "trace = " + std::to_string(tr.real()) + "+" +
                    std::to_string(tr.imag()) + "i");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  const auto& v = state.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int qubit_count) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

int DensityMatrix::qubit_count() const noexcept {
  return std::countr_zero(dim());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const int> keep) {
  const int n = rho.qubit_count();
  std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n || kept[static_cast<std::size_t>(q)]) {
      throw Error(ErrorKind::kBadQubitList,
                  "invalid qubit " + std::to_string(q) + " to keep");
    }
    kept[static_cast<std::size_t>(q)] = true;
  }
  std::vector<std::size_t> keep_bits;
  std::vector<std::size_t> drop_bits;
  for (int q : keep) keep_bits.push_back(bit_for_position(q, n));
  for (int q = 1; q <= n; ++q) {
    if (!kept[static_cast<std::size_t>(q)]) {
      drop_bits.push_back(bit_for_position(q, n));
    }
  }

  // Map a (kept, dropped) index pair back into the full register index.
  auto scatter = [](std::size_t value, const std::vector<std::size_t>& bits) {
    std::size_t out = 0;
    const std::size_t k = bits.size();
    for (std::size_t j = 0; j < k; ++j) {
      if ((value >> (k - 1 - j)) & 1U) out |= std::size_t{1} << bits[j];
    }
    return out;
  };

  const std::size_t keep_dim = std::size_t{1} << keep_bits.size();
  const std::size_t drop_dim = std::size_t{1} << drop_bits.size();
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(keep_dim),
                                          static_cast<Eigen::Index>(keep_dim));
  const auto& m = rho.matrix();
  for (std::size_t r = 0; r < keep_dim; ++r) {
    const std::size_t rf = scatter(r, keep_bits);
    for (std::size_t c = 0; c < keep_dim; ++c) {
      const std::size_t cf = scatter(c, keep_bits);
      Complex acc{0.0, 0.0};
      for (std::size_t e = 0; e < drop_dim; ++e) {
        const std::size_t ef = scatter(e, drop_bits);
        acc += m(static_cast<Eigen::Index>(rf | ef),
                 static_cast<Eigen::Index>(cf | ef));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum Spectrum::from_values(std::vector<double> values) {
  for (double& v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidArgument, "non-finite eigenvalue");
    }
    if (v < -kClampTolerance) {
      throw Error(ErrorKind::kNotPositiveSemidefinite,
                  "eigenvalue " + std::to_string(v) + " below zero");
    }
    if (std::abs(v) <= kClampTolerance) v = 0.0;
  }
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  if (std::abs(total - 1.0) > kTraceTolerance) {
    throw Error(ErrorKind::kNotUnitTrace,
                "eigenvalues sum to " + std::to_string(total));
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  s.values_ = std::move(values);
  return s;
}

double Spectrum::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

Spectrum Spectrum::padded(std::size_t n) const {
  Spectrum s = *this;
  if (s.values_.size() < n) s.values_.resize(n, 0.0);
  return s;
}

Spectrum hermitian_spectrum(const ComplexMatrix& m) {
  return hermitian_spectrum(DensityMatrix(m));
}

Spectrum hermitian_spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kInvalidArgument, "eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return Spectrum::from_values(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double shannon_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double entropy_bits(const Spectrum& s) {
  return std::max(0.0, shannon_bits(s.values()));
}

}  // namespace memchan
