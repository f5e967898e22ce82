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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/linalg.hpp"
#include "memchan/parallel.hpp"
#include "memchan/schemes.hpp"

namespace memchan {

/// Spectrum of the scheme's representative state after an explicit
/// Kraus-sum evaluation of the memory channel. Independent of the closed-form
/// eigenvalue expressions; this is the oracle they are checked against.
Spectrum brute_force_spectrum(SchemeKind kind, const PauliProbs& probs,
                              double mu);

/// Largest elementwise gap between the sorted brute-force spectrum and the
/// zero-padded closed-form spectrum.
double oracle_gap(SchemeKind kind, const PauliProbs& probs, double mu);

struct EnsembleMember {
  double weight;
  DensityMatrix state;
};

/// chi = S(E(sum w_i rho_i)) - sum w_i S(E(rho_i)) for the given ensemble.
/// Weights must be nonnegative and sum to 1 within 1e-9, states must share a
/// dimension (kBadEnsemble otherwise).
double holevo_chi(std::span<const EnsembleMember> ensemble,
                  const MemoryChannel& channel, std::span<const int> touched);

struct ThresholdResult {
  std::optional<double> mu_t;
  SchemeKind scheme_a;
  SchemeKind scheme_b;
  double bracket_width = 0.0;
};

inline constexpr double kDefaultThresholdTolerance = 1e-6;
inline constexpr std::size_t kThresholdScanPoints = 1024;

/// Memory coefficient in (0, 1) at which the per-use information of the two
/// schemes crosses. A scan over kThresholdScanPoints interior points finds
/// the first sign change, which is then bisected until the bracket is within
/// `tol` and the curves agree to 1e-9. No sign change gives an empty mu_t;
/// curves that agree within 1e-12 over the whole scan raise
/// kDegenerateCurves.
ThresholdResult memory_threshold(SchemeKind a, SchemeKind b,
                                 const PauliProbs& probs,
                                 double tol = kDefaultThresholdTolerance);

struct ThresholdPoint {
  double p;                    // per-axis depolarizing probability p_i
  std::optional<double> mu_t;  // empty = gap
};

struct ThresholdCurve {
  std::vector<ThresholdPoint> points;
  std::optional<ThresholdPoint> maximum;
};

/// memory_threshold over the depolarizing family (1 - 3 p_i, p_i, p_i, p_i)
/// for every p_i in `p_grid` (each in [0, 1/3]). Points with no crossing or
/// with degenerate curves are recorded as gaps.
ThresholdCurve threshold_curve(std::span<const double> p_grid, SchemeKind a,
                               SchemeKind b,
                               double tol = kDefaultThresholdTolerance,
                               Parallelism parallelism = {});

struct SweepTable {
  std::vector<double> mu_grid;
  std::vector<SchemeKind> kinds;
  std::vector<std::vector<double>> columns;  // columns[k][i]: kinds[k] at mu_grid[i]
};

/// n >= 2 equally spaced points i / (n - 1) covering [0, 1].
std::vector<double> uniform_grid(std::size_t n);

/// normalized_information for each kind at each grid point. The grid must be
/// sorted and inside [0, 1].
SweepTable sweep(const PauliProbs& probs, std::span<const SchemeKind> kinds,
                 std::span<const double> mu_grid, Parallelism parallelism = {});

/// Entropy of the spectrum with k entries (1 - mu) a^-b + mu / k and
/// a^b - k entries (1 - mu) a^-b: the output (1 - mu) I / a^b + mu sigma
/// when sigma has k equal nonzero eigenvalues. kBadK unless 1 <= k <= a^b.
double high_error_entropy(int a, int b, long k, double mu);

/// Probabilities uniform on the 3-simplex and mu uniform on [0, 1].
struct ChannelDraw {
  PauliProbs probs;
  double mu;
};
ChannelDraw draw_random_channel(std::mt19937_64& rng);

struct OracleCase {
  SchemeKind kind;
  PauliProbs probs;
  double mu;
  double gap;
};

struct OracleReport {
  std::size_t comparisons = 0;
  double max_gap = 0.0;
  std::optional<OracleCase> worst;
};

/// Compares closed-form and brute-force spectra for `trials` seeded random
/// draws per scheme. Draws are generated serially from `seed`, so results do
/// not depend on the worker count.
OracleReport compare_oracle(std::span<const SchemeKind> kinds,
                            std::size_t trials, std::uint64_t seed,
                            Parallelism parallelism = {});

}  // namespace memchan
