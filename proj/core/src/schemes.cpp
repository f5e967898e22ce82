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

#include "memchan/schemes.hpp"

#include <array>
#include <cmath>
#include <string>

#include "memchan/errors.hpp"

namespace memchan {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct SchemeEntry {
  SchemeKind kind;
  std::string_view name;
  int uses;
  int payload;
};

constexpr SchemeEntry kSchemeTable[] = {
    {SchemeKind::kProductX, "product-x", 2, 2},
    {SchemeKind::kProductY, "product-y", 2, 2},
    {SchemeKind::kProductZ, "product-z", 2, 2},
    {SchemeKind::kBell, "bell", 2, 2},
    {SchemeKind::kEntanglementAssisted, "at", 2, 4},
    {SchemeKind::kSemiQuantum1, "sq1", 2, 4},
    {SchemeKind::kSemiQuantum2, "sq2", 4, 8},
};

const SchemeEntry& entry(SchemeKind kind) {
  for (const auto& e : kSchemeTable) {
    if (e.kind == kind) return e;
  }
  throw Error(ErrorKind::kUnknownScheme, "unrecognized scheme enumerator");
}

ComplexVector tensor_all(std::initializer_list<BellLabel> labels) {
  ComplexVector v = ComplexVector::Ones(1);
  for (BellLabel l : labels) {
    const PureState bell = bell_state(l);
    const ComplexVector& b = bell.amplitudes();
    ComplexVector next(v.size() * b.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next.segment(i * b.size(), b.size()) = v(i) * b;
    }
    v = std::move(next);
  }
  return v;
}

BellLabel bell_at(int i) { return static_cast<BellLabel>(((i % 4) + 4) % 4); }

// Product-z eigenvalues; the x and y variants are obtained by permuting the
// error probabilities before calling this.
std::vector<double> product_z_eigenvalues(double p0, double px, double py,
                                          double pz, double mu) {
  const double m = 1.0 - mu;
  const double keep = p0 + pz;
  const double flip = px + py;
  return {m * keep * keep + mu * keep, m * flip * flip + mu * flip,
          m * keep * flip, m * keep * flip};
}

void push_n(std::vector<double>& out, double value, int count) {
  out.insert(out.end(), static_cast<std::size_t>(count), value);
}

}  // namespace

std::string_view to_string(SchemeKind kind) { return entry(kind).name; }

SchemeKind parse_scheme(std::string_view name) {
  for (const auto& e : kSchemeTable) {
    if (e.name == name) return e.kind;
  }
  throw Error(ErrorKind::kUnknownScheme,
              "unknown scheme '" + std::string(name) + "'");
}

CodingScheme scheme_info(SchemeKind kind) {
  const auto& e = entry(kind);
  return {e.kind, e.uses, e.payload};
}

PureState bell_state(BellLabel label) {
  ComplexVector v = ComplexVector::Zero(4);
  switch (label) {
    case BellLabel::kPsiPlus:
      v(0) = kInvSqrt2;
      v(3) = kInvSqrt2;
      break;
    case BellLabel::kPsiMinus:
      v(0) = kInvSqrt2;
      v(3) = -kInvSqrt2;
      break;
    case BellLabel::kPhiPlus:
      v(1) = kInvSqrt2;
      v(2) = kInvSqrt2;
      break;
    case BellLabel::kPhiMinus:
      v(1) = kInvSqrt2;
      v(2) = -kInvSqrt2;
      break;
  }
  return PureState(std::move(v));
}

PureState product_state(SchemeKind basis, int j, int k) {
  if ((j != 0 && j != 1) || (k != 0 && k != 1)) {
    throw Error(ErrorKind::kInvalidArgument, "product labels must be 0 or 1");
  }
  auto single = [basis](int l) {
    ComplexVector v = ComplexVector::Zero(2);
    const double s = l == 0 ? 1.0 : -1.0;
    switch (basis) {
      case SchemeKind::kProductZ:
        v(l) = 1.0;
        break;
      case SchemeKind::kProductX:
        v(0) = kInvSqrt2;
        v(1) = s * kInvSqrt2;
        break;
      case SchemeKind::kProductY:
        v(0) = kInvSqrt2;
        v(1) = Complex{0.0, s * kInvSqrt2};
        break;
      default:
        throw Error(ErrorKind::kInvalidArgument,
                    std::string(to_string(basis)) + " is not a product scheme");
    }
    return PureState(std::move(v));
  };
  return tensor(single(j), single(k));
}

PureState sq1_state(int index) {
  if (index < 1 || index > 16) {
    throw Error(ErrorKind::kInvalidArgument, "sq1 index must be in 1..16");
  }
  using B = BellLabel;
  // (sender first term, receiver first term, sender second, receiver second)
  static constexpr std::array<std::array<B, 4>, 8> kTerms = {{
      {B::kPsiPlus, B::kPsiPlus, B::kPsiMinus, B::kPsiMinus},
      {B::kPsiMinus, B::kPsiPlus, B::kPsiPlus, B::kPsiMinus},
      {B::kPhiPlus, B::kPsiPlus, B::kPhiMinus, B::kPsiMinus},
      {B::kPhiMinus, B::kPsiPlus, B::kPhiPlus, B::kPsiMinus},
      {B::kPsiPlus, B::kPhiPlus, B::kPsiMinus, B::kPhiMinus},
      {B::kPsiMinus, B::kPhiPlus, B::kPsiPlus, B::kPhiMinus},
      {B::kPhiPlus, B::kPhiPlus, B::kPhiMinus, B::kPhiMinus},
      {B::kPhiMinus, B::kPhiPlus, B::kPhiPlus, B::kPhiMinus},
  }};
  const auto& t = kTerms[static_cast<std::size_t>((index - 1) / 2)];
  const double sign = (index % 2 == 1) ? 1.0 : -1.0;
  ComplexVector v = tensor_all({t[0], t[1]}) + sign * tensor_all({t[2], t[3]});
  return PureState::normalized(std::move(v));
}

PureState sq2_state(int m, int i) {
  if (m < 1 || m > 16 || i < 0 || i > 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "sq2 labels must satisfy 1 <= m <= 16, 0 <= i <= 3");
  }
  // Within every state the four terms carry Bell labels 0..3 (Psi+, Psi-,
  // Phi+, Phi-) on pairs 1 and 4 and label i+t (mod 4) on pair 3. The block
  // of m selects the permutation applied on pair 2, the position within the
  // block selects the sign pattern.
  static constexpr std::array<std::array<int, 4>, 4> kPair2 = {{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<double, 4>, 4> kSigns = {{
      {1, 1, 1, 1},
      {1, 1, -1, -1},
      {1, -1, -1, 1},
      {1, -1, 1, -1},
  }};
  const auto& pair2 = kPair2[static_cast<std::size_t>((m - 1) / 4)];
  const auto& signs = kSigns[static_cast<std::size_t>((m - 1) % 4)];
  ComplexVector v = ComplexVector::Zero(256);
  for (int t = 0; t < 4; ++t) {
    v += signs[static_cast<std::size_t>(t)] *
         tensor_all({bell_at(t), bell_at(pair2[static_cast<std::size_t>(t)]),
                     bell_at(i + t), bell_at(t)});
  }
  v *= 0.5;
  return PureState(std::move(v));
}

SchemeStateSet build_representative(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kProductX:
    case SchemeKind::kProductY:
    case SchemeKind::kProductZ:
      return {product_state(kind, 0, 0), 2, {1, 2}};
    case SchemeKind::kBell:
      return {bell_state(BellLabel::kPsiPlus), 2, {1, 2}};
    case SchemeKind::kEntanglementAssisted:
      return {tensor(bell_state(BellLabel::kPsiPlus),
                     bell_state(BellLabel::kPsiPlus)),
              4,
              {1, 3}};
    case SchemeKind::kSemiQuantum1:
      return {sq1_state(1), 4, {1, 2}};
    case SchemeKind::kSemiQuantum2:
      return {sq2_state(1, 0), 8, {1, 2, 3, 4}};
  }
  throw Error(ErrorKind::kUnknownScheme, "unrecognized scheme enumerator");
}

std::vector<double> closed_form_eigenvalues(SchemeKind kind,
                                            const PauliProbs& probs,
                                            double mu) {
  const double p0 = probs.p0();
  const double px = probs.px();
  const double py = probs.py();
  const double pz = probs.pz();
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "memory coefficient " + std::to_string(mu) + " outside [0, 1]");
  }
  const double m = 1.0 - mu;

  switch (kind) {
    case SchemeKind::kProductZ:
      return product_z_eigenvalues(p0, px, py, pz, mu);
    case SchemeKind::kProductX:
      return product_z_eigenvalues(p0, pz, py, px, mu);
    case SchemeKind::kProductY:
      return product_z_eigenvalues(p0, px, pz, py, mu);

    case SchemeKind::kBell:
      return {m * (p0 * p0 + px * px + py * py + pz * pz) + mu,
              m * 2.0 * (p0 * pz + px * py),
              m * 2.0 * (p0 * px + py * pz),
              m * 2.0 * (p0 * py + px * pz)};

    case SchemeKind::kEntanglementAssisted: {
      const std::array<double, 4> p = probs.values();
      std::vector<double> out;
      out.reserve(16);
      for (double q : p) out.push_back(m * q * q + mu * q);
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) push_n(out, m * p[a] * p[b], 2);
      }
      return out;
    }

    case SchemeKind::kSemiQuantum1: {
      std::vector<double> out = {
          m * (p0 * p0 + pz * pz) + mu * (p0 + pz),
          m * (px * px + py * py) + mu * (px + py),
          m * 2.0 * p0 * pz,
          m * 2.0 * px * py,
      };
      push_n(out, m * (p0 * px + py * pz), 2);
      push_n(out, m * (p0 * py + px * pz), 2);
      return out;
    }

    case SchemeKind::kSemiQuantum2: {
      const double a0z = p0 * pz, axy = px * py;
      const double a0x = p0 * px, ayz = py * pz;
      const double a0y = p0 * py, axz = px * pz;
      const double s0z = p0 * p0 + pz * pz, sxy = px * px + py * py;
      const double s0x = p0 * p0 + px * px, syz = py * py + pz * pz;
      const double s0y = p0 * p0 + py * py, sxz = px * px + pz * pz;
      std::vector<double> out;
      out.reserve(64);
      out.push_back(m * (p0 * p0 * p0 * p0 + pz * pz * pz * pz +
                         px * px * px * px + py * py * py * py) +
                    mu);
      push_n(out, m * (2.0 * a0z * a0z + 2.0 * axy * axy), 3);
      push_n(out, m * (2.0 * a0x * a0x + 2.0 * ayz * ayz), 3);
      push_n(out, m * (2.0 * a0y * a0y + 2.0 * axz * axz), 3);
      push_n(out, m * (a0z * s0z + axy * sxy), 4);
      push_n(out, m * (a0z * sxy + axy * s0z), 12);
      push_n(out, m * (a0x * s0x + ayz * syz), 4);
      push_n(out, m * (a0x * syz + ayz * s0x), 8);
      push_n(out, m * (a0y * sxz + axz * s0y), 4);
      push_n(out, m * (a0y * s0y + axz * sxz), 4);
      push_n(out, m * 4.0 * p0 * px * py * pz, 6);
      push_n(out, m * (a0z + axy) * (a0x + ayz), 8);
      push_n(out, m * (a0z + axy) * (a0y + axz), 4);
      return out;
    }
  }
  throw Error(ErrorKind::kUnknownScheme, "unrecognized scheme enumerator");
}

Spectrum closed_form_spectrum(SchemeKind kind, const PauliProbs& probs,
                              double mu) {
  return Spectrum::from_values(closed_form_eigenvalues(kind, probs, mu));
}

double mutual_information_total(SchemeKind kind, const PauliProbs& probs,
                                double mu) {
  const double payload = scheme_info(kind).payload_bits;
  return payload - entropy_bits(closed_form_spectrum(kind, probs, mu));
}

double normalized_information(SchemeKind kind, const PauliProbs& probs,
                              double mu) {
  return mutual_information_total(kind, probs, mu) /
         scheme_info(kind).channel_uses;
}

}  // namespace memchan
