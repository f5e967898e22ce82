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

#include "memchan/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "memchan/errors.hpp"

namespace memchan {
namespace {

constexpr double kCrossingResidual = 1e-9;
constexpr double kDegenerateGap = 1e-12;
constexpr double kMinBracket = 1e-15;
constexpr double kEnsembleWeightTolerance = 1e-9;

// 53 random bits mapped to [0, 1); independent of the standard library's
// distribution implementations, so seeded draws are reproducible everywhere.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double information_gap(SchemeKind a, SchemeKind b, const PauliProbs& probs,
                       double mu) {
  return normalized_information(a, probs, mu) -
         normalized_information(b, probs, mu);
}

bool same_sign(double x, double y) { return (x < 0.0) == (y < 0.0); }

}  // namespace

Spectrum brute_force_spectrum(SchemeKind kind, const PauliProbs& probs,
                              double mu) {
  const SchemeStateSet set = build_representative(kind);
  const MemoryChannel channel(probs, mu, scheme_info(kind).channel_uses);
  const DensityMatrix out =
      apply_channel(channel, DensityMatrix::from_pure(set.representative),
                    set.touched_qubits);
  return hermitian_spectrum(out);
}

double oracle_gap(SchemeKind kind, const PauliProbs& probs, double mu) {
  const Spectrum brute = brute_force_spectrum(kind, probs, mu);
  const Spectrum closed = closed_form_spectrum(kind, probs, mu).padded(brute.size());
  if (closed.size() != brute.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double gap = 0.0;
  for (std::size_t i = 0; i < brute.size(); ++i) {
    gap = std::max(gap, std::abs(brute[i] - closed[i]));
  }
  return gap;
}

double holevo_chi(std::span<const EnsembleMember> ensemble,
                  const MemoryChannel& channel, std::span<const int> touched) {
  if (ensemble.empty()) {
    throw Error(ErrorKind::kBadEnsemble, "ensemble is empty");
  }
  const std::size_t dim = ensemble.front().state.dim();
  double total_weight = 0.0;
  for (const auto& member : ensemble) {
    if (!std::isfinite(member.weight) || member.weight < 0.0) {
      throw Error(ErrorKind::kBadEnsemble,
                  "weight " + std::to_string(member.weight) + " is negative");
    }
    if (member.state.dim() != dim) {
      throw Error(ErrorKind::kBadEnsemble, "ensemble states differ in dimension");
    }
    total_weight += member.weight;
  }
  if (std::abs(total_weight - 1.0) > kEnsembleWeightTolerance) {
    throw Error(ErrorKind::kBadEnsemble,
                "weights sum to " + std::to_string(total_weight));
  }

  ComplexMatrix average = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  double conditional = 0.0;
  for (const auto& member : ensemble) {
    if (member.weight == 0.0) continue;
    average += member.weight * member.state.matrix();
    conditional += member.weight *
                   entropy_bits(hermitian_spectrum(
                       apply_channel(channel, member.state, touched)));
  }
  // Renormalize away the (<= 1e-9) weight slack so the mixture is a state.
  average /= average.trace().real();
  const double mixed = entropy_bits(hermitian_spectrum(
      apply_channel(channel, DensityMatrix(std::move(average)), touched)));
  return mixed - conditional;
}

ThresholdResult memory_threshold(SchemeKind a, SchemeKind b,
                                 const PauliProbs& probs, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tolerance must be positive");
  }
  ThresholdResult result{std::nullopt, a, b, 0.0};
  auto f = [&](double mu) { return information_gap(a, b, probs, mu); };

  const double step = 1.0 / static_cast<double>(kThresholdScanPoints + 1);
  double prev_mu = 0.0;
  double prev_f = 0.0;
  double largest = 0.0;
  std::optional<std::pair<double, double>> bracket;
  for (std::size_t k = 1; k <= kThresholdScanPoints; ++k) {
    const double mu = static_cast<double>(k) * step;
    const double fk = f(mu);
    largest = std::max(largest, std::abs(fk));
    if (!bracket) {
      if (fk == 0.0) {
        bracket = {mu, mu};
      } else if (k > 1 && !same_sign(prev_f, fk)) {
        bracket = {prev_mu, mu};
      }
    }
    prev_mu = mu;
    prev_f = fk;
  }
  if (largest <= kDegenerateGap) {
    throw Error(ErrorKind::kDegenerateCurves,
                std::string(to_string(a)) + " and " + std::string(to_string(b)) +
                    " coincide over (0, 1)");
  }
  if (!bracket) return result;

  double lo = bracket->first;
  double hi = bracket->second;
  if (lo == hi) {
    result.mu_t = lo;
    return result;
  }
  double f_lo = f(lo);
  double mid = lo;
  for (;;) {
    mid = lo + 0.5 * (hi - lo);
    const double f_mid = f(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (same_sign(f_mid, f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tol && std::abs(f_mid) <= kCrossingResidual) break;
    if (hi - lo <= kMinBracket) break;
  }
  result.mu_t = mid;
  result.bracket_width = hi - lo;
  return result;
}

ThresholdCurve threshold_curve(std::span<const double> p_grid, SchemeKind a,
                               SchemeKind b, double tol,
                               Parallelism parallelism) {
  for (double p : p_grid) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0 / 3.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "per-axis depolarizing probability " + std::to_string(p) +
                      " outside [0, 1/3]");
    }
  }
  ThresholdCurve curve;
  curve.points.resize(p_grid.size());
  parallel_for(p_grid.size(), parallelism, [&](std::size_t i) {
    const double p = p_grid[i];
    ThresholdPoint point{p, std::nullopt};
    try {
      const PauliProbs probs = make_probs(1.0 - 3.0 * p, p, p, p);
      point.mu_t = memory_threshold(a, b, probs, tol).mu_t;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateCurves) throw;
    }
    curve.points[i] = point;
  });
  for (const auto& point : curve.points) {
    if (point.mu_t && (!curve.maximum || *point.mu_t > *curve.maximum->mu_t)) {
      curve.maximum = point;
    }
  }
  return curve;
}

std::vector<double> uniform_grid(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "grid needs at least 2 points");
  }
  std::vector<double> grid(n);
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = static_cast<double>(i) / denom;
  }
  return grid;
}

SweepTable sweep(const PauliProbs& probs, std::span<const SchemeKind> kinds,
                 std::span<const double> mu_grid, Parallelism parallelism) {
  for (std::size_t i = 0; i < mu_grid.size(); ++i) {
    const double mu = mu_grid[i];
    if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "grid value " + std::to_string(mu) + " outside [0, 1]");
    }
    if (i > 0 && mu < mu_grid[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument, "grid is not sorted");
    }
  }
  SweepTable table;
  table.mu_grid.assign(mu_grid.begin(), mu_grid.end());
  table.kinds.assign(kinds.begin(), kinds.end());
  table.columns.assign(kinds.size(), std::vector<double>(mu_grid.size()));
  parallel_for(mu_grid.size(), parallelism, [&](std::size_t i) {
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      table.columns[k][i] = normalized_information(kinds[k], probs, mu_grid[i]);
    }
  });
  return table;
}

double high_error_entropy(int a, int b, long k, double mu) {
  if (a < 2 || b < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need a >= 2 and b >= 1");
  }
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "memory coefficient " + std::to_string(mu) + " outside [0, 1]");
  }
  const double size = std::pow(static_cast<double>(a), b);
  if (k < 1 || static_cast<double>(k) > size) {
    throw Error(ErrorKind::kBadK, "k = " + std::to_string(k) +
                                      " outside [1, " +
                                      std::to_string(static_cast<long>(size)) +
                                      "]");
  }
  const double base = (1.0 - mu) / size;
  const double raised = base + mu / static_cast<double>(k);
  auto term = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
  const double entropy = -(static_cast<double>(k) * term(raised) +
                           (size - static_cast<double>(k)) * term(base));
  return std::max(0.0, entropy);
}

ChannelDraw draw_random_channel(std::mt19937_64& rng) {
  std::array<double, 3> cuts{unit_uniform(rng), unit_uniform(rng),
                             unit_uniform(rng)};
  std::sort(cuts.begin(), cuts.end());
  const double p0 = cuts[0];
  const double px = cuts[1] - cuts[0];
  const double py = cuts[2] - cuts[1];
  const double pz = 1.0 - cuts[2];
  const double mu = unit_uniform(rng);
  return {make_probs(p0, px, py, pz), mu};
}

OracleReport compare_oracle(std::span<const SchemeKind> kinds,
                            std::size_t trials, std::uint64_t seed,
                            Parallelism parallelism) {
  std::mt19937_64 rng(seed);
  std::vector<OracleCase> cases;
  cases.reserve(kinds.size() * trials);
  for (SchemeKind kind : kinds) {
    for (std::size_t t = 0; t < trials; ++t) {
      const ChannelDraw draw = draw_random_channel(rng);
      cases.push_back({kind, draw.probs, draw.mu, 0.0});
    }
  }
  parallel_for(cases.size(), parallelism, [&](std::size_t i) {
    cases[i].gap = oracle_gap(cases[i].kind, cases[i].probs, cases[i].mu);
  });

  OracleReport report;
  report.comparisons = cases.size();
  for (const auto& c : cases) {
    if (!report.worst || c.gap > report.max_gap) {
      report.max_gap = c.gap;
      report.worst = c;
    }
  }
  return report;
}

}  // namespace memchan
