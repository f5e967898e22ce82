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

#include "memchan/channel.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "memchan/errors.hpp"

namespace memchan {
namespace {

constexpr double kProbsSumTolerance = 1e-9;

struct PresetEntry {
  PresetKind kind;
  std::string_view name;
  std::string_view formula;
};

constexpr PresetEntry kPresetTable[] = {
    {PresetKind::kDepolarizing, "depolarizing", "(1-p, p/3, p/3, p/3)"},
    {PresetKind::kBitFlip, "bit-flip", "(1-p, p, 0, 0)"},
    {PresetKind::kPhaseFlip, "phase-flip", "(1-p, 0, 0, p)"},
    {PresetKind::kBitPhaseFlip, "bit-phase-flip", "(1-p, 0, p, 0)"},
    {PresetKind::kTwoPauli, "two-pauli", "(1-p, p/2, p/2, 0)"},
    {PresetKind::kPhaseDamping, "phase-damping", "(1-p/2, 0, 0, p/2)"},
};

const PresetEntry& entry(PresetKind kind) {
  for (const auto& e : kPresetTable) {
    if (e.kind == kind) return e;
  }
  throw Error(ErrorKind::kUnknownPreset, "unrecognized preset enumerator");
}

// A Pauli word on n qubits acts on the computational basis as a signed
// permutation: W|b> = phase * (-1)^{popcount(b & zmask)} |b ^ xmask>, with a
// global phase that cancels in W rho W^dagger.
struct WordAction {
  std::size_t xmask = 0;
  std::size_t zmask = 0;
};

WordAction word_action(std::span<const Pauli> word,
                       std::span<const std::size_t> bits) {
  WordAction a;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const std::size_t bit = std::size_t{1} << bits[k];
    switch (word[k]) {
      case Pauli::kI: break;
      case Pauli::kX: a.xmask |= bit; break;
      case Pauli::kY: a.xmask |= bit; a.zmask |= bit; break;
      case Pauli::kZ: a.zmask |= bit; break;
    }
  }
  return a;
}

}  // namespace

PauliProbs PauliProbs::make(double p0, double px, double py, double pz) {
  const std::array<double, 4> p{p0, px, py, pz};
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "probability " + std::to_string(v) + " outside [0, 1]");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kProbsSumTolerance) {
    throw Error(ErrorKind::kNotNormalized,
                "probabilities sum to " + std::to_string(total));
  }
  return PauliProbs(p);
}

std::string_view to_string(PresetKind kind) { return entry(kind).name; }

std::string_view preset_formula(PresetKind kind) {
  return entry(kind).formula;
}

PresetKind parse_preset(std::string_view name) {
  for (const auto& e : kPresetTable) {
    if (e.name == name) return e.kind;
  }
  throw Error(ErrorKind::kUnknownPreset,
              "unknown channel preset '" + std::string(name) + "'");
}

PauliProbs preset_probs(const ChannelPreset& preset) {
  const double p = preset.p;
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "preset strength p = " + std::to_string(p) + " outside [0, 1]");
  }
  switch (preset.kind) {
    case PresetKind::kDepolarizing:
      return make_probs(1.0 - p, p / 3.0, p / 3.0, p / 3.0);
    case PresetKind::kBitFlip:
      return make_probs(1.0 - p, p, 0.0, 0.0);
    case PresetKind::kPhaseFlip:
      return make_probs(1.0 - p, 0.0, 0.0, p);
    case PresetKind::kBitPhaseFlip:
      return make_probs(1.0 - p, 0.0, p, 0.0);
    case PresetKind::kTwoPauli:
      return make_probs(1.0 - p, p / 2.0, p / 2.0, 0.0);
    case PresetKind::kPhaseDamping:
      return make_probs(1.0 - p / 2.0, 0.0, 0.0, p / 2.0);
  }
  throw Error(ErrorKind::kUnknownPreset, "unrecognized preset enumerator");
}

MemoryChannel::MemoryChannel(PauliProbs probs, double mu, int uses)
    : probs_(probs), mu_(mu), uses_(uses) {
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "memory coefficient " + std::to_string(mu) + " outside [0, 1]");
  }
  if (uses != 2 && uses != 4) {
    throw Error(ErrorKind::kInvalidArgument,
                "channel uses must be 2 or 4, got " + std::to_string(uses));
  }
}

double conditional_prob(const PauliProbs& probs, double mu, Pauli prev,
                        Pauli cur) {
  return (1.0 - mu) * probs[cur] + (prev == cur ? mu : 0.0);
}

double noise_weight(const MemoryChannel& channel,
                    std::span<const Pauli> indices) {
  if (static_cast<int>(indices.size()) != channel.uses()) {
    throw Error(ErrorKind::kLengthMismatch,
                "expected " + std::to_string(channel.uses()) +
                    " Pauli indices, got " + std::to_string(indices.size()));
  }
  const PauliProbs& p = channel.probs();
  double tail = 1.0;
  bool all_equal = true;
  for (std::size_t k = 1; k < indices.size(); ++k) {
    tail *= p[indices[k]];
    all_equal = all_equal && indices[k] == indices[0];
  }
  const double mu = channel.mu();
  return p[indices[0]] * ((1.0 - mu) * tail + (all_equal ? mu : 0.0));
}

DensityMatrix apply_channel(const MemoryChannel& channel,
                            const DensityMatrix& input,
                            std::span<const int> touched) {
  const int n_qubits = input.qubit_count();
  if (static_cast<int>(touched.size()) != channel.uses()) {
    throw Error(ErrorKind::kBadQubitList,
                "channel acts on " + std::to_string(channel.uses()) +
                    " qubits but " + std::to_string(touched.size()) +
                    " were listed");
  }
  std::vector<std::size_t> bits;
  bits.reserve(touched.size());
  std::uint64_t seen = 0;
  for (int q : touched) {
    if (q < 1 || q > n_qubits) {
      throw Error(ErrorKind::kBadQubitList,
                  "qubit " + std::to_string(q) + " outside 1.." +
                      std::to_string(n_qubits));
    }
    if (seen & (std::uint64_t{1} << q)) {
      throw Error(ErrorKind::kBadQubitList,
                  "qubit " + std::to_string(q) + " listed twice");
    }
    seen |= std::uint64_t{1} << q;
    bits.push_back(bit_for_position(q, n_qubits));
  }

  const auto dim = static_cast<Eigen::Index>(input.dim());
  const ComplexMatrix& rho = input.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  std::vector<double> sign(static_cast<std::size_t>(dim));
  std::vector<Pauli> word(touched.size(), Pauli::kI);

  const std::size_t n_words = std::size_t{1} << (2 * touched.size());
  for (std::size_t code = 0; code < n_words; ++code) {
    // Base-4 digits of `code`, most significant digit for the first qubit.
    for (std::size_t k = 0; k < word.size(); ++k) {
      const std::size_t shift = 2 * (word.size() - 1 - k);
      word[k] = static_cast<Pauli>((code >> shift) & 3U);
    }
    const double w = noise_weight(channel, word);
    if (w == 0.0) continue;

    const WordAction act = word_action(word, bits);
    for (Eigen::Index a = 0; a < dim; ++a) {
      const auto src = static_cast<std::size_t>(a) ^ act.xmask;
      sign[static_cast<std::size_t>(a)] =
          (std::popcount(src & act.zmask) & 1) ? -1.0 : 1.0;
    }
    // (W rho W^dagger)(a, c) = s(a) s(c) rho(a ^ x, c ^ x); Eigen is
    // column-major so iterate columns outermost.
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto cs = static_cast<Eigen::Index>(static_cast<std::size_t>(c) ^ act.xmask);
      const double wc = w * sign[static_cast<std::size_t>(c)];
      for (Eigen::Index a = 0; a < dim; ++a) {
        const auto as = static_cast<Eigen::Index>(static_cast<std::size_t>(a) ^ act.xmask);
        out(a, c) += (wc * sign[static_cast<std::size_t>(a)]) * rho(as, cs);
      }
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace memchan
