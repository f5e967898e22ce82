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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "memchan/linalg.hpp"

namespace memchan {

/// Single-use Pauli error distribution (p0, px, py, pz).
class PauliProbs {
 public:
  /// Rejects negative or non-finite entries (kInvalidArgument) and totals
  /// off by more than 1e-9 (kNotNormalized).
  static PauliProbs make(double p0, double px, double py, double pz);

  static PauliProbs noiseless() { return make(1.0, 0.0, 0.0, 0.0); }

  double p0() const noexcept { return p_[0]; }
  double px() const noexcept { return p_[1]; }
  double py() const noexcept { return p_[2]; }
  double pz() const noexcept { return p_[3]; }

  double operator[](Pauli index) const noexcept {
    return p_[static_cast<std::size_t>(index)];
  }
  const std::array<double, 4>& values() const noexcept { return p_; }

  friend bool operator==(const PauliProbs&, const PauliProbs&) = default;

 private:
  explicit PauliProbs(std::array<double, 4> p) : p_(p) {}
  std::array<double, 4> p_{};
};

inline PauliProbs make_probs(double p0, double px, double py, double pz) {
  return PauliProbs::make(p0, px, py, pz);
}

enum class PresetKind {
  kDepolarizing,
  kBitFlip,
  kPhaseFlip,
  kBitPhaseFlip,
  kTwoPauli,
  kPhaseDamping,
};

inline constexpr PresetKind kAllPresets[] = {
    PresetKind::kDepolarizing, PresetKind::kBitFlip,
    PresetKind::kPhaseFlip,    PresetKind::kBitPhaseFlip,
    PresetKind::kTwoPauli,     PresetKind::kPhaseDamping,
};

struct ChannelPreset {
  PresetKind kind;
  double p;  // preset error strength in [0, 1]
};

std::string_view to_string(PresetKind kind);
/// Human-readable (p0, px, py, pz) in terms of p, e.g. "(1-p, p/3, p/3, p/3)".
std::string_view preset_formula(PresetKind kind);
/// Parses the CLI spelling ("depolarizing", "bit-flip", ...); kUnknownPreset
/// otherwise.
PresetKind parse_preset(std::string_view name);

/// depolarizing (1-p, p/3, p/3, p/3); bit-flip (1-p, p, 0, 0);
/// phase-flip (1-p, 0, 0, p); bit-phase-flip (1-p, 0, p, 0);
/// two-pauli (1-p, p/2, p/2, 0); phase-damping (1-p/2, 0, 0, p/2).
PauliProbs preset_probs(const ChannelPreset& preset);

/// A Pauli channel whose consecutive uses share the same error with
/// probability mu.
class MemoryChannel {
 public:
  MemoryChannel(PauliProbs probs, double mu, int uses);

  const PauliProbs& probs() const noexcept { return probs_; }
  double mu() const noexcept { return mu_; }
  int uses() const noexcept { return uses_; }

 private:
  PauliProbs probs_;
  double mu_;
  int uses_;
};

/// Markov kernel p(cur | prev) = (1 - mu) p_cur + mu [prev == cur].
double conditional_prob(const PauliProbs& probs, double mu, Pauli prev,
                        Pauli cur);

/// Joint probability of the error word (i1, ..., in):
///   p_{i1} [ (1 - mu) prod_{k>=2} p_{ik} + mu [all indices equal] ].
/// For two uses this is the Markov chain above; for four uses it is the
/// block-correlated form where all four errors coincide with probability mu.
double noise_weight(const MemoryChannel& channel, std::span<const Pauli> indices);

/// Sum over all 4^n Pauli words on the `touched` qubits (1-based positions,
/// first entry receives i1) of noise_weight * W rho W^dagger.
DensityMatrix apply_channel(const MemoryChannel& channel,
                            const DensityMatrix& input,
                            std::span<const int> touched);

}  // namespace memchan
