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

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "memchan/schemes.hpp"
#include "support/expect_error.hpp"
#include "support/kraus.hpp"
#include "support/random.hpp"

namespace memchan {
namespace {

using testing::expect_error;
using testing::kTestSeed;

const PauliProbs kDepol15 = make_probs(0.85, 0.05, 0.05, 0.05);

PauliProbs random_probs(std::mt19937_64& rng) {
  const std::vector<double> v = testing::random_simplex(rng, 4);
  return make_probs(v[0], v[1], v[2], v[3]);
}

// Decodes `code` into n base-4 digits, most significant first.
std::vector<Pauli> word_from_code(std::size_t code, std::size_t n) {
  std::vector<Pauli> word(n);
  for (std::size_t k = 0; k < n; ++k) {
    word[n - 1 - k] = static_cast<Pauli>(code & 3U);
    code >>= 2;
  }
  return word;
}

TEST(MakeProbs, accepts_valid_distributions) {
  const PauliProbs clean = make_probs(1, 0, 0, 0);
  EXPECT_EQ(clean, PauliProbs::noiseless());
  EXPECT_EQ(kDepol15.p0(), 0.85);
  EXPECT_EQ(kDepol15.px(), 0.05);
  EXPECT_EQ(kDepol15[Pauli::kZ], 0.05);
}

TEST(MakeProbs, rejects_bad_distributions) {
  expect_error(ErrorKind::kNotNormalized, [] { make_probs(0.5, 0.5, 0.1, 0); });
  expect_error(ErrorKind::kInvalidArgument, [] { make_probs(1.1, -0.1, 0, 0); });
  expect_error(ErrorKind::kInvalidArgument,
               [] { make_probs(std::nan(""), 0, 0, 1); });
  // Within the 1e-9 slack.
  EXPECT_NO_THROW(make_probs(0.25, 0.25, 0.25, 0.25 + 5e-10));
}

TEST(Presets, match_reference_distributions) {
  const auto depolarizing = preset_probs({PresetKind::kDepolarizing, 0.15});
  const std::array<double, 4> depol15{0.85, 0.05, 0.05, 0.05};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(depolarizing.values()[i], depol15[i], 1e-16);
  }
  const auto two = preset_probs({PresetKind::kTwoPauli, 0.5});
  EXPECT_EQ(two.values(), (std::array<double, 4>{0.5, 0.25, 0.25, 0.0}));
  const auto damp = preset_probs({PresetKind::kPhaseDamping, 0.5});
  EXPECT_EQ(damp.values(), (std::array<double, 4>{0.75, 0.0, 0.0, 0.25}));
  EXPECT_EQ(preset_probs({PresetKind::kBitFlip, 0.3}).px(), 0.3);
  EXPECT_EQ(preset_probs({PresetKind::kPhaseFlip, 0.3}).pz(), 0.3);
  EXPECT_EQ(preset_probs({PresetKind::kBitPhaseFlip, 0.3}).py(), 0.3);
}

TEST(Presets, names_round_trip) {
  for (PresetKind kind : kAllPresets) {
    EXPECT_EQ(parse_preset(to_string(kind)), kind);
    EXPECT_FALSE(preset_formula(kind).empty());
  }
  expect_error(ErrorKind::kUnknownPreset, [] { parse_preset("amplitude-damping"); });
  expect_error(ErrorKind::kInvalidArgument,
               [] { preset_probs({PresetKind::kDepolarizing, 1.5}); });
}

TEST(MemoryChannel, validates_parameters) {
  expect_error(ErrorKind::kInvalidArgument, [] { MemoryChannel(kDepol15, 1.01, 2); });
  expect_error(ErrorKind::kInvalidArgument, [] { MemoryChannel(kDepol15, -0.1, 2); });
  expect_error(ErrorKind::kInvalidArgument, [] { MemoryChannel(kDepol15, 0.5, 3); });
}

TEST(ConditionalProb, limits_and_reference_value) {
  for (Pauli prev : kAllPaulis) {
    for (Pauli cur : kAllPaulis) {
      EXPECT_EQ(conditional_prob(kDepol15, 0.0, prev, cur), kDepol15[cur]);
      EXPECT_EQ(conditional_prob(kDepol15, 1.0, prev, cur), prev == cur ? 1.0 : 0.0);
    }
  }
  EXPECT_NEAR(conditional_prob(kDepol15, 0.5, Pauli::kX, Pauli::kX), 0.525, 1e-15);
}

TEST(ConditionalProb, rows_sum_to_one) {
  std::mt19937_64 rng(kTestSeed + 10);
  std::uniform_real_distribution<double> unit;
  for (int trial = 0; trial < 100; ++trial) {
    const PauliProbs p = random_probs(rng);
    const double mu = unit(rng);
    for (Pauli prev : kAllPaulis) {
      double row = 0.0;
      for (Pauli cur : kAllPaulis) row += conditional_prob(p, mu, prev, cur);
      EXPECT_NEAR(row, 1.0, 1e-12);
    }
  }
}

TEST(NoiseWeight, reference_values) {
  const std::array<Pauli, 2> ii{Pauli::kI, Pauli::kI};
  EXPECT_NEAR(noise_weight(MemoryChannel(kDepol15, 0.5, 2), ii), 0.78625, 1e-15);

  const std::array<Pauli, 4> distinct{Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};
  EXPECT_EQ(noise_weight(MemoryChannel(kDepol15, 1.0, 4), distinct), 0.0);

  const PauliProbs p = make_probs(0.4, 0.3, 0.2, 0.1);
  const MemoryChannel memoryless(p, 0.0, 2);
  for (Pauli a : kAllPaulis) {
    for (Pauli b : kAllPaulis) {
      const std::array<Pauli, 2> w{a, b};
      EXPECT_EQ(noise_weight(memoryless, w), p[a] * p[b]);
    }
  }

  expect_error(ErrorKind::kLengthMismatch, [&] {
    noise_weight(MemoryChannel(kDepol15, 0.5, 4), ii);
  });
}

TEST(NoiseWeight, matches_literal_kraus_weights) {
  std::mt19937_64 rng(kTestSeed + 11);
  std::uniform_real_distribution<double> unit;
  for (int uses : {2, 4}) {
    const PauliProbs p = random_probs(rng);
    const double mu = unit(rng);
    const MemoryChannel channel(p, mu, uses);
    const std::size_t total = std::size_t{1} << (2 * uses);
    for (std::size_t code = 0; code < total; ++code) {
      const std::vector<Pauli> word = word_from_code(code, uses);
      EXPECT_NEAR(noise_weight(channel, word), testing::literal_weight(p, mu, word),
                  1e-16);
    }
  }
}

TEST(NoiseWeight, sums_to_one) {
  std::mt19937_64 rng(kTestSeed + 12);
  std::uniform_real_distribution<double> unit;
  for (int trial = 0; trial < 200; ++trial) {
    const int uses = trial % 2 == 0 ? 2 : 4;
    const MemoryChannel channel(random_probs(rng), unit(rng), uses);
    const std::size_t total = std::size_t{1} << (2 * uses);
    double sum = 0.0;
    for (std::size_t code = 0; code < total; ++code) {
      sum += noise_weight(channel, word_from_code(code, uses));
    }
    EXPECT_NEAR(sum, 1.0, 1e-12) << "trial " << trial;
  }
}

TEST(ApplyChannel, noiseless_is_identity_map) {
  std::mt19937_64 rng(kTestSeed + 13);
  const DensityMatrix rho = testing::random_density(rng, 3);
  const std::vector<int> touched{3, 1};
  const DensityMatrix out =
      apply_channel(MemoryChannel(PauliProbs::noiseless(), 0.37, 2), rho, touched);
  EXPECT_EQ(out.matrix(), rho.matrix());
}

TEST(ApplyChannel, bell_state_examples) {
  const DensityMatrix psi = DensityMatrix::from_pure(bell_state(BellLabel::kPsiPlus));
  const std::vector<int> touched{1, 2};

  const Spectrum memoryless =
      hermitian_spectrum(apply_channel(MemoryChannel(kDepol15, 0.0, 2), psi, touched));
  // 1 - 3 * 0.09 followed by three copies of 2 (p0 px + py pz) = 0.09.
  ASSERT_EQ(memoryless.size(), 4U);
  EXPECT_NEAR(memoryless[0], 0.73, 1e-14);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(memoryless[i], 0.09, 1e-14);

  const DensityMatrix collective =
      apply_channel(MemoryChannel(make_probs(0.1, 0.2, 0.3, 0.4), 1.0, 2), psi, touched);
  EXPECT_TRUE(collective.matrix().isApprox(psi.matrix(), 1e-14));
  const Spectrum s = hermitian_spectrum(collective);
  EXPECT_NEAR(s[0], 1.0, 1e-14);
  EXPECT_EQ(s[1] + s[2] + s[3], 0.0);
}

TEST(ApplyChannel, rejects_bad_qubit_lists) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  const MemoryChannel channel(kDepol15, 0.5, 2);
  const std::vector<int> too_few{1};
  const std::vector<int> duplicate{1, 1};
  const std::vector<int> out_of_range{1, 3};
  const std::vector<int> zero{0, 1};
  for (const auto* list : {&too_few, &duplicate, &out_of_range, &zero}) {
    expect_error(ErrorKind::kBadQubitList,
                 [&] { apply_channel(channel, rho, *list); });
  }
}

TEST(ApplyChannel, matches_dense_kraus_sum) {
  std::mt19937_64 rng(kTestSeed + 14);
  std::uniform_real_distribution<double> unit;
  struct Layout {
    int qubits;
    std::vector<int> touched;
  };
  const std::vector<Layout> layouts{
      {2, {1, 2}}, {2, {2, 1}}, {3, {3, 1}}, {4, {1, 3}}, {4, {4, 2, 1, 3}}};
  for (const Layout& layout : layouts) {
    for (int trial = 0; trial < 3; ++trial) {
      const PauliProbs p = random_probs(rng);
      const double mu = unit(rng);
      const DensityMatrix rho = testing::random_density(rng, layout.qubits);
      const MemoryChannel channel(p, mu, static_cast<int>(layout.touched.size()));
      const ComplexMatrix got = apply_channel(channel, rho, layout.touched).matrix();
      const ComplexMatrix want =
          testing::literal_apply(p, mu, rho.matrix(), layout.qubits, layout.touched);
      EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-14)
          << "qubits " << layout.qubits << " trial " << trial;
    }
  }
}

TEST(ApplyChannel, preserves_trace_and_positivity) {
  std::mt19937_64 rng(kTestSeed + 15);
  std::uniform_real_distribution<double> unit;
  for (int trial = 0; trial < 40; ++trial) {
    const int uses = trial % 4 == 0 ? 4 : 2;
    const int qubits = uses == 4 ? 5 : 3;
    const std::vector<int> touched =
        uses == 4 ? std::vector<int>{2, 5, 1, 4} : std::vector<int>{2, 3};
    const DensityMatrix rho = testing::random_density(rng, qubits);
    const DensityMatrix out =
        apply_channel(MemoryChannel(random_probs(rng), unit(rng), uses), rho, touched);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
    EXPECT_LE(hermiticity_defect(out.matrix()), 1e-14);
    EXPECT_NO_THROW(hermitian_spectrum(out));
  }
}

TEST(ApplyChannel, affine_in_memory_coefficient) {
  std::mt19937_64 rng(kTestSeed + 16);
  std::uniform_real_distribution<double> unit;
  for (int uses : {2, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      const PauliProbs p = random_probs(rng);
      const double mu = unit(rng);
      const int qubits = uses;
      std::vector<int> touched(static_cast<std::size_t>(uses));
      for (int q = 0; q < uses; ++q) touched[static_cast<std::size_t>(q)] = q + 1;
      const DensityMatrix rho = testing::random_density(rng, qubits);
      const ComplexMatrix at_mu =
          apply_channel(MemoryChannel(p, mu, uses), rho, touched).matrix();
      const ComplexMatrix at_0 =
          apply_channel(MemoryChannel(p, 0.0, uses), rho, touched).matrix();
      const ComplexMatrix at_1 =
          apply_channel(MemoryChannel(p, 1.0, uses), rho, touched).matrix();
      const ComplexMatrix mixed = (1.0 - mu) * at_0 + mu * at_1;
      EXPECT_LE((at_mu - mixed).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

}  // namespace
}  // namespace memchan
