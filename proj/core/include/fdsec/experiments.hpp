// Copyright 2026 The fdsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdsec/channel.hpp"
#include "fdsec/monte_carlo.hpp"
#include "fdsec/scheme.hpp"
#include "fdsec/secrecy.hpp"

namespace fdsec {

enum class SweepVariable { kGammaRrDb, kAlpha };

std::string_view sweep_variable_name(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

/// Per-curve replacements of the sweep's base averages, in dB.
struct LinkOverrides {
  std::optional<double> sr_db, rd_db, se_db, re_db, rr_db;

  LinkDb apply(LinkDb base) const;
  bool empty() const noexcept { return !sr_db && !rd_db && !se_db && !re_db && !rr_db; }

  friend bool operator==(const LinkOverrides&, const LinkOverrides&) = default;
};

/// One curve of a sweep.
struct SeriesSpec {
  SchemeSpec scheme;
  /// Empty means scheme_label(scheme), plus any overrides.
  std::string label;
  LinkOverrides overrides;

  std::string display_label() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

struct SweepSpec {
  std::string name;
  SweepVariable variable = SweepVariable::kGammaRrDb;
  /// Non-empty, strictly increasing. dB for gamma_rr_db.
  std::vector<double> grid;
  LinkBudget budget = LinkBudget::from_db({});
  std::vector<SeriesSpec> series;
  TargetRate rate{1.0};
  EstimatorConfig estimator;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// One CSV line of results.
struct OutputRow {
  std::string scheme;
  std::string x_name;
  double x_value = 0.0;
  double sop = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const OutputRow&, const OutputRow&) = default;
};

OutputRow make_output_row(std::string scheme, std::string x_name, double x_value,
                          const SopEstimate& estimate);

/// Budget and scheme of `series` at sweep coordinate `x`.
OutageProbe resolve_probe(const SweepSpec& spec, const SeriesSpec& series, double x);

/// |grid| x |series| rows, grid-major. Grid point i reads substream block
/// spec.estimator.substream_block + i; all series of a point share it.
std::vector<OutputRow> run_sweep(const SweepSpec& spec);

/// Evaluates every series once at the spec's base budget, under CRN.
std::vector<OutputRow> run_compare(const SweepSpec& spec);

/// Names accepted by make_preset.
std::vector<std::string> preset_names();

/// Reproduces the reference scenarios at desk scale:
///  fig3  single-relay trusted schemes vs gamma_rr, 40/40/10/10 dB
///  fig4  relay selection and beamforming vs gamma_rr, 30/30/10/10 dB, K = 4
///  fig6  SBJ (alpha = 0.5) and conventional untrusted FDR vs gamma_rr
///  fig7  SBJ vs alpha at gamma_rr in {-10, 0, 10, 20, 30} dB
/// All default to R0 = 1, n = 1e5 and the default seed. Throws
/// std::invalid_argument on an unknown name.
SweepSpec make_preset(std::string_view name);

struct AlphaSearch {
  double alpha_star = 0.0;
  SopEstimate estimate;
  std::vector<double> grid;
  std::vector<SopEstimate> grid_estimates;
  bool refined = false;
};

/// Minimizes the SBJ outage probability over alpha in [0, 1].
///
/// Every candidate alpha is scored on the same realizations, which makes
/// the objective deterministic. A uniform grid is scanned first (ties go to
/// the smallest alpha). With `refine`, a golden-section search over the two
/// grid cells around the best point runs on the same realizations; its
/// result replaces the grid optimum only if strictly fewer outages occur.
AlphaSearch optimize_alpha(const LinkBudget& budget, TargetRate rate, const EstimatorConfig& cfg,
                           int grid_points, bool refine);

}  // namespace fdsec
