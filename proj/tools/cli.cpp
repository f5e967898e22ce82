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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "memchan/analysis.hpp"
#include "memchan/channel.hpp"
#include "memchan/errors.hpp"
#include "memchan/parallel.hpp"
#include "memchan/schemes.hpp"

namespace memchan::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_number(double x) { return fmt::format("{:.12g}", x); }
std::string exact_number(double x) { return fmt::format("{:.17g}", x); }

// ---------------------------------------------------------------------------
// Channel flags

struct ChannelFlags {
  std::optional<std::string> preset;
  std::optional<double> p;
  std::optional<double> p0, px, py, pz;
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& f) {
  cmd->add_option("--channel", f.preset,
                  "Preset: depolarizing, bit-flip, phase-flip, bit-phase-flip, "
                  "two-pauli, phase-damping");
  cmd->add_option("--p", f.p, "Preset error strength in [0, 1]");
  cmd->add_option("--p0", f.p0, "Probability of no error");
  cmd->add_option("--px", f.px, "Probability of an X error");
  cmd->add_option("--py", f.py, "Probability of a Y error");
  cmd->add_option("--pz", f.pz, "Probability of a Z error");
}

struct ResolvedChannel {
  PauliProbs probs;
  std::optional<ChannelPreset> preset;
};

ResolvedChannel resolve_channel(const ChannelFlags& f) {
  const bool any_preset = f.preset || f.p;
  const int explicit_count = (f.p0 ? 1 : 0) + (f.px ? 1 : 0) + (f.py ? 1 : 0) +
                             (f.pz ? 1 : 0);
  if (any_preset && explicit_count > 0) {
    throw UsageError("give either --channel/--p or --p0/--px/--py/--pz, not both");
  }
  if (any_preset) {
    if (!f.preset || !f.p) throw UsageError("--channel and --p must be given together");
    const ChannelPreset preset{parse_preset(*f.preset), *f.p};
    return {preset_probs(preset), preset};
  }
  if (explicit_count == 4) return {make_probs(*f.p0, *f.px, *f.py, *f.pz), std::nullopt};
  if (explicit_count > 0) throw UsageError("all four of --p0/--px/--py/--pz are required");
  throw UsageError("no channel given; use --channel NAME --p P or --p0/--px/--py/--pz");
}

Json channel_json(const ResolvedChannel& c) {
  Json j;
  if (c.preset) {
    j["preset"] = std::string(to_string(c.preset->kind));
    j["p"] = exact_number(c.preset->p);
  }
  const auto& v = c.probs.values();
  j["probs"] = {{"p0", exact_number(v[0])},
                {"px", exact_number(v[1])},
                {"py", exact_number(v[2])},
                {"pz", exact_number(v[3])}};
  return j;
}

// ---------------------------------------------------------------------------
// Scheme lists

std::vector<SchemeKind> parse_scheme_list(const std::vector<std::string>& names) {
  std::vector<SchemeKind> kinds;
  for (const auto& name : names) kinds.push_back(parse_scheme(name));
  return kinds;
}

std::pair<SchemeKind, SchemeKind> parse_pair(const std::vector<std::string>& names) {
  if (names.size() != 2) {
    throw UsageError(fmt::format("--pair needs exactly two schemes, got {}", names.size()));
  }
  const SchemeKind a = parse_scheme(names[0]);
  const SchemeKind b = parse_scheme(names[1]);
  if (a == b) throw UsageError("--pair needs two distinct schemes");
  return {a, b};
}

std::vector<std::string> scheme_names(std::span<const SchemeKind> kinds) {
  std::vector<std::string> out;
  for (SchemeKind k : kinds) out.emplace_back(to_string(k));
  return out;
}

// ---------------------------------------------------------------------------
// Output

enum class Format { kText, kCsv, kJson };

Format parse_format(const std::string& name, bool text_allowed) {
  if (name == "json") return Format::kJson;
  if (name == "csv" && !text_allowed) return Format::kCsv;
  if (name == "text" && text_allowed) return Format::kText;
  throw UsageError(fmt::format("unsupported --format '{}'", name));
}

void emit(const std::optional<std::string>& path, const std::string& text,
          std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(fmt::format("cannot open '{}' for writing", *path));
  file << text;
  file.close();
  if (!file) throw IoError(fmt::format("failed writing '{}'", *path));
}

std::string dump(const Json& inputs, const Json& results) {
  Json doc;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["version"] = std::string(kVersion);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

struct InfoArgs {
  ChannelFlags channel;
  std::string scheme;
  double mu = 0.0;
  std::string format = "text";
};

int cmd_info(const InfoArgs& a, std::ostream& out) {
  const ResolvedChannel channel = resolve_channel(a.channel);
  const Format format = parse_format(a.format, true);
  const SchemeKind kind = parse_scheme(a.scheme);
  const Spectrum spectrum = closed_form_spectrum(kind, channel.probs, a.mu);
  const double total = mutual_information_total(kind, channel.probs, a.mu);
  const double per_use = normalized_information(kind, channel.probs, a.mu);

  if (format == Format::kJson) {
    Json inputs{{"command", "info"}, {"channel", channel_json(channel)},
                {"scheme", a.scheme}, {"mu", exact_number(a.mu)}};
    Json results{{"total_bits", total},
                 {"bits_per_use", per_use},
                 {"spectrum", std::vector<double>(spectrum.values().begin(),
                                                  spectrum.values().end())}};
    out << dump(inputs, results);
    return kExitOk;
  }
  std::vector<std::string> values;
  for (double v : spectrum.values()) values.push_back(csv_number(v));
  const auto& p = channel.probs.values();
  out << fmt::format("scheme        {}\n", to_string(kind))
      << fmt::format("mu            {}\n", csv_number(a.mu))
      << fmt::format("probs         {} {} {} {}\n", csv_number(p[0]), csv_number(p[1]),
                     csv_number(p[2]), csv_number(p[3]))
      << fmt::format("total_bits    {}\n", csv_number(total))
      << fmt::format("bits_per_use  {}\n", csv_number(per_use))
      << fmt::format("spectrum      {}\n", fmt::join(values, " "));
  return kExitOk;
}

struct SweepArgs {
  ChannelFlags channel;
  std::vector<std::string> schemes;
  long mu_steps = 101;
  std::string format = "csv";
  std::optional<std::string> output;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const ResolvedChannel channel = resolve_channel(a.channel);
  const Format format = parse_format(a.format, false);
  if (a.mu_steps < 2) throw UsageError("--mu-steps must be at least 2");
  const std::vector<SchemeKind> kinds =
      a.schemes.empty() ? std::vector<SchemeKind>(std::begin(kAllSchemes),
                                                  std::end(kAllSchemes))
                        : parse_scheme_list(a.schemes);
  const std::vector<double> grid = uniform_grid(static_cast<std::size_t>(a.mu_steps));
  const SweepTable table =
      sweep(channel.probs, kinds, grid, Parallelism::from_environment());
  const std::vector<std::string> names = scheme_names(kinds);

  std::string text;
  if (format == Format::kCsv) {
    text = fmt::format("mu,{}\n", fmt::join(names, ","));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      text += csv_number(grid[i]);
      for (const auto& column : table.columns) text += "," + csv_number(column[i]);
      text += "\n";
    }
  } else {
    Json inputs{{"command", "sweep"},
                {"channel", channel_json(channel)},
                {"schemes", names},
                {"mu_steps", a.mu_steps}};
    Json columns = Json::object();
    for (std::size_t k = 0; k < kinds.size(); ++k) columns[names[k]] = table.columns[k];
    text = dump(inputs, Json{{"mu", grid}, {"columns", columns}});
  }
  emit(a.output, text, out);
  return kExitOk;
}

struct ThresholdArgs {
  ChannelFlags channel;
  std::vector<std::string> pair;
  double tol = kDefaultThresholdTolerance;
  std::string format = "text";
};

int cmd_threshold(const ThresholdArgs& a, std::ostream& out, std::ostream& err) {
  const ResolvedChannel channel = resolve_channel(a.channel);
  const Format format = parse_format(a.format, true);
  const auto [first, second] = parse_pair(a.pair);
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");

  std::optional<double> mu_t;
  std::string note;
  try {
    mu_t = memory_threshold(first, second, channel.probs, a.tol).mu_t;
    if (!mu_t) note = "the curves do not cross on (0, 1); one scheme dominates for every mu > 0";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateCurves) throw;
    note = "the curves coincide; the threshold is undefined";
  }

  if (format == Format::kJson) {
    Json inputs{{"command", "threshold"},
                {"channel", channel_json(channel)},
                {"pair", a.pair},
                {"tol", exact_number(a.tol)}};
    Json results{{"mu_t", mu_t ? Json(*mu_t) : Json(nullptr)}};
    if (!note.empty()) results["note"] = note;
    out << dump(inputs, results);
    return kExitOk;
  }
  out << (mu_t ? fmt::format("{:.6f}", *mu_t) : std::string("none")) << "\n";
  if (!note.empty()) err << "note: " << note << "\n";
  return kExitOk;
}

struct CurveArgs {
  std::vector<std::string> pair;
  double p_min = 0.001;
  double p_max = 0.333;
  long p_steps = 200;
  double tol = kDefaultThresholdTolerance;
  std::string format = "csv";
  std::optional<std::string> output;
};

int cmd_threshold_curve(const CurveArgs& a, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(a.format, false);
  const auto [first, second] = parse_pair(a.pair);
  if (a.p_steps < 2) throw UsageError("--p-steps must be at least 2");
  if (!(a.p_min >= 0.0 && a.p_min < a.p_max && a.p_max <= 1.0 / 3.0)) {
    throw UsageError("need 0 <= --p-min < --p-max <= 1/3");
  }
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");

  std::vector<double> grid(static_cast<std::size_t>(a.p_steps));
  const double span = a.p_max - a.p_min;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = a.p_min + span * static_cast<double>(i) / static_cast<double>(grid.size() - 1);
  }
  grid.back() = a.p_max;
  const ThresholdCurve curve =
      threshold_curve(grid, first, second, a.tol, Parallelism::from_environment());

  std::string text;
  if (format == Format::kCsv) {
    text = "p,mu_t\n";
    for (const auto& point : curve.points) {
      text += csv_number(point.p) + "," + (point.mu_t ? csv_number(*point.mu_t) : "") + "\n";
    }
  } else {
    Json points = Json::array();
    for (const auto& point : curve.points) {
      points.push_back({{"p", point.p},
                        {"mu_t", point.mu_t ? Json(*point.mu_t) : Json(nullptr)}});
    }
    Json maximum = nullptr;
    if (curve.maximum) maximum = {{"p", curve.maximum->p}, {"mu_t", *curve.maximum->mu_t}};
    Json inputs{{"command", "threshold-curve"},
                {"pair", a.pair},
                {"p_min", exact_number(a.p_min)},
                {"p_max", exact_number(a.p_max)},
                {"p_steps", a.p_steps},
                {"tol", exact_number(a.tol)}};
    text = dump(inputs, Json{{"points", points}, {"maximum", maximum}});
  }
  emit(a.output, text, out);

  std::ostream& summary = a.output ? out : err;
  if (curve.maximum) {
    summary << fmt::format("max mu_t {:.6f} at p_i = {}\n", *curve.maximum->mu_t,
                           csv_number(curve.maximum->p));
  } else {
    summary << "max mu_t none\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  long trials = 100;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
  std::vector<std::string> schemes;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (!(a.tolerance >= 0.0)) throw UsageError("--tolerance must be nonnegative");
  const std::vector<SchemeKind> kinds =
      a.schemes.empty() ? std::vector<SchemeKind>(std::begin(kAllSchemes),
                                                  std::end(kAllSchemes))
                        : parse_scheme_list(a.schemes);
  const OracleReport report = compare_oracle(
      kinds, static_cast<std::size_t>(a.trials), a.seed, Parallelism::from_environment());
  out << fmt::format("compared {} spectra, max gap {:.3e}, tolerance {:.3e}\n",
                     report.comparisons, report.max_gap, a.tolerance);
  if (report.max_gap <= a.tolerance) {
    out << "ok\n";
    return kExitOk;
  }
  const OracleCase& w = *report.worst;
  const auto& p = w.probs.values();
  out << fmt::format(
      "FAIL worst case: scheme {} p0 {} px {} py {} pz {} mu {} gap {:.3e}\n",
      to_string(w.kind), exact_number(p[0]), exact_number(p[1]), exact_number(p[2]),
      exact_number(p[3]), exact_number(w.mu), w.gap);
  return kExitVerifyFailed;
}

int cmd_presets(std::ostream& out) {
  for (PresetKind kind : kAllPresets) {
    out << fmt::format("{:<16}{}\n", to_string(kind), preset_formula(kind));
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical information over Pauli channels with memory", "memchan"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::function<int()> action;

  InfoArgs info;
  auto* info_cmd = app.add_subcommand("info", "Information and spectrum for one scheme");
  add_channel_flags(info_cmd, info.channel);
  info_cmd->add_option("--scheme", info.scheme, "Coding scheme")->required();
  info_cmd->add_option("--mu", info.mu, "Memory coefficient in [0, 1]")->required();
  info_cmd->add_option("--format", info.format, "text or json");
  info_cmd->callback([&] { action = [&] { return cmd_info(info, out); }; });

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Bits per use over a mu grid");
  add_channel_flags(sweep_cmd, sw.channel);
  sweep_cmd->add_option("--schemes", sw.schemes, "Comma-separated schemes (default all)")
      ->delimiter(',');
  sweep_cmd->add_option("--mu-steps", sw.mu_steps, "Grid points over [0, 1]");
  sweep_cmd->add_option("--format", sw.format, "csv or json");
  sweep_cmd->add_option("--output", sw.output, "Write to this file instead of stdout");
  sweep_cmd->callback([&] { action = [&] { return cmd_sweep(sw, out); }; });

  ThresholdArgs th;
  auto* th_cmd = app.add_subcommand("threshold", "Memory threshold between two schemes");
  add_channel_flags(th_cmd, th.channel);
  th_cmd->add_option("--pair", th.pair, "Two schemes, comma-separated")
      ->delimiter(',')
      ->required();
  th_cmd->add_option("--tol", th.tol, "Bracket tolerance");
  th_cmd->add_option("--format", th.format, "text or json");
  th_cmd->callback([&] { action = [&] { return cmd_threshold(th, out, err); }; });

  CurveArgs cv;
  auto* cv_cmd = app.add_subcommand(
      "threshold-curve", "Memory threshold across the depolarizing family");
  cv_cmd->add_option("--pair", cv.pair, "Two schemes, comma-separated")
      ->delimiter(',')
      ->required();
  cv_cmd->add_option("--p-min", cv.p_min, "Smallest per-axis error probability");
  cv_cmd->add_option("--p-max", cv.p_max, "Largest per-axis error probability");
  cv_cmd->add_option("--p-steps", cv.p_steps, "Grid points");
  cv_cmd->add_option("--tol", cv.tol, "Bracket tolerance");
  cv_cmd->add_option("--format", cv.format, "csv or json");
  cv_cmd->add_option("--output", cv.output, "Write to this file instead of stdout");
  cv_cmd->callback([&] { action = [&] { return cmd_threshold_curve(cv, out, err); }; });

  VerifyArgs vf;
  auto* vf_cmd = app.add_subcommand("verify", "Closed-form spectra against brute force");
  vf_cmd->add_option("--trials", vf.trials, "Random channels per scheme");
  vf_cmd->add_option("--seed", vf.seed, "Seed for the channel draws");
  vf_cmd->add_option("--tolerance", vf.tolerance, "Largest acceptable gap");
  vf_cmd->add_option("--schemes", vf.schemes, "Comma-separated schemes (default all)")
      ->delimiter(',');
  vf_cmd->callback([&] { action = [&] { return cmd_verify(vf, out); }; });

  auto* presets_cmd = app.add_subcommand("presets", "List channel presets");
  presets_cmd->callback([&] { action = [&] { return cmd_presets(out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace memchan::cli
