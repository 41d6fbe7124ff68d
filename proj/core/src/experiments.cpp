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

#include "fdsec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fdsec {
namespace {

std::string format_db(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%gdB", v);
  return buf;
}

std::vector<double> uniform_grid(double start, double stop, int points) {
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    g[static_cast<std::size_t>(i)] =
        i == points - 1 ? stop : start + (stop - start) * i / (points - 1);
  }
  return g;
}

std::vector<double> rr_grid_db() { return uniform_grid(-10.0, 40.0, 11); }

SeriesSpec series(SchemeId id, double alpha = 1.0) { return {{id, alpha}, "", {}}; }

EstimatorConfig per_point(const EstimatorConfig& base, std::size_t index) {
  EstimatorConfig cfg = base;
  const std::uint64_t block = std::uint64_t{base.substream_block} + index;
  if (block > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("sweep: substream block overflow");
  }
  cfg.substream_block = static_cast<std::uint32_t>(block);
  return cfg;
}

}  // namespace

std::string_view sweep_variable_name(SweepVariable v) {
  return v == SweepVariable::kAlpha ? "alpha" : "gamma_rr_db";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  if (name == "gamma_rr_db") return SweepVariable::kGammaRrDb;
  if (name == "alpha") return SweepVariable::kAlpha;
  return std::nullopt;
}

LinkDb LinkOverrides::apply(LinkDb base) const {
  if (sr_db) base.sr = *sr_db;
  if (rd_db) base.rd = *rd_db;
  if (se_db) base.se = *se_db;
  if (re_db) base.re = *re_db;
  if (rr_db) base.rr = *rr_db;
  return base;
}

std::string SeriesSpec::display_label() const {
  if (!label.empty()) return label;
  std::string out = scheme_label(scheme);
  std::string extra;
  auto add = [&](const char* name, const std::optional<double>& v) {
    if (!v) return;
    if (!extra.empty()) extra += ",";
    extra += name;
    extra += "=" + format_db(*v);
  };
  add("sr", overrides.sr_db);
  add("rd", overrides.rd_db);
  add("se", overrides.se_db);
  add("re", overrides.re_db);
  add("rr", overrides.rr_db);
  if (!extra.empty()) out += " [" + extra + "]";
  return out;
}

void SweepSpec::validate() const {
  if (grid.empty()) throw std::invalid_argument("grid: must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw std::invalid_argument("grid: values must be finite");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("grid: values must be strictly increasing");
    }
    if (variable == SweepVariable::kAlpha && !(grid[i] >= 0.0 && grid[i] <= 1.0)) {
      throw std::invalid_argument("grid: alpha values must lie in [0, 1]");
    }
  }
  if (series.empty()) throw std::invalid_argument("series: must not be empty");
  for (const SeriesSpec& s : series) {
    validate_scheme(s.scheme);
    if (budget.num_relays() < min_relays(s.scheme.id)) {
      throw std::invalid_argument("relays: scheme " + std::string(scheme_key(s.scheme.id)) +
                                  " needs at least " + std::to_string(min_relays(s.scheme.id)));
    }
    if (variable == SweepVariable::kGammaRrDb && s.overrides.rr_db) {
      throw std::invalid_argument("series: gamma_rr_db is swept and cannot be overridden");
    }
  }
  estimator.validate();
}

OutputRow make_output_row(std::string scheme, std::string x_name, double x_value,
                          const SopEstimate& estimate) {
  return {std::move(scheme), std::move(x_name), x_value,   estimate.p_hat,
          estimate.ci_lo,    estimate.ci_hi,    estimate.n, estimate.seed};
}

OutageProbe resolve_probe(const SweepSpec& spec, const SeriesSpec& s, double x) {
  LinkDb db = s.overrides.apply(spec.budget.db());
  SchemeSpec scheme = s.scheme;
  if (spec.variable == SweepVariable::kGammaRrDb) {
    db.rr = x;
  } else if (scheme.id == SchemeId::kSbj) {
    scheme.alpha = x;
  }
  const LinkBudget budget = db == spec.budget.db() ? spec.budget : spec.budget.with_db(db);
  return {scheme, budget};
}

namespace {

std::string row_label(const SweepSpec& spec, const SeriesSpec& s) {
  if (spec.variable == SweepVariable::kAlpha && s.label.empty() &&
      s.scheme.id == SchemeId::kSbj) {
    std::string out = "SBJ";
    const std::string full = s.display_label();
    if (const auto pos = full.find(" ["); pos != std::string::npos) out += full.substr(pos);
    return out;
  }
  return s.display_label();
}

}  // namespace

std::vector<OutputRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::string x_name(sweep_variable_name(spec.variable));
  std::vector<OutputRow> rows;
  rows.reserve(spec.grid.size() * spec.series.size());
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double x = spec.grid[i];
    std::vector<OutageProbe> probes;
    probes.reserve(spec.series.size());
    for (const SeriesSpec& s : spec.series) probes.push_back(resolve_probe(spec, s, x));
    const std::vector<SopEstimate> est =
        estimate_sop_probes(probes, spec.rate, per_point(spec.estimator, i));
    for (std::size_t k = 0; k < spec.series.size(); ++k) {
      rows.push_back(make_output_row(row_label(spec, spec.series[k]), x_name, x, est[k]));
    }
  }
  return rows;
}

std::vector<OutputRow> run_compare(const SweepSpec& spec) {
  if (spec.series.empty()) throw std::invalid_argument("series: must not be empty");
  for (const SeriesSpec& s : spec.series) validate_scheme(s.scheme);
  std::vector<OutageProbe> probes;
  for (const SeriesSpec& s : spec.series) {
    const LinkDb db = s.overrides.apply(spec.budget.db());
    probes.push_back({s.scheme, db == spec.budget.db() ? spec.budget : spec.budget.with_db(db)});
  }
  const std::vector<SopEstimate> est = estimate_sop_probes(probes, spec.rate, spec.estimator);
  std::vector<OutputRow> rows;
  for (std::size_t k = 0; k < spec.series.size(); ++k) {
    rows.push_back(make_output_row(spec.series[k].display_label(), "gamma_rr_db",
                                   probes[k].budget.db().rr, est[k]));
  }
  return rows;
}

std::vector<std::string> preset_names() { return {"fig3", "fig4", "fig6", "fig7"}; }

SweepSpec make_preset(std::string_view name) {
  SweepSpec spec;
  spec.name = std::string(name);
  spec.rate = TargetRate(1.0);
  if (name == "fig3") {
    spec.budget = LinkBudget::from_db({40.0, 40.0, 10.0, 10.0, 0.0});
    spec.grid = rr_grid_db();
    spec.series = {series(SchemeId::kHdr), series(SchemeId::kFdr),
                   series(SchemeId::kHybridHdFd), series(SchemeId::kFdj)};
  } else if (name == "fig4") {
    spec.budget = LinkBudget::from_db({30.0, 30.0, 10.0, 10.0, 0.0}, 4);
    spec.grid = rr_grid_db();
    spec.series = {series(SchemeId::kRandomRs),    series(SchemeId::kMaxMinRs),
                   series(SchemeId::kOptimalFdRs), series(SchemeId::kOptimalHdRs),
                   series(SchemeId::kHybridRs),    series(SchemeId::kBeamforming)};
  } else if (name == "fig6") {
    spec.budget = LinkBudget::from_db({40.0, 40.0, 10.0, 10.0, 0.0});
    spec.grid = rr_grid_db();
    spec.series = {series(SchemeId::kSbj, 0.5), series(SchemeId::kConventionalUntrustedFdr)};
  } else if (name == "fig7") {
    spec.variable = SweepVariable::kAlpha;
    spec.budget = LinkBudget::from_db({40.0, 40.0, 10.0, 10.0, 0.0});
    spec.grid = uniform_grid(0.0, 1.0, 21);
    for (double rr : {-10.0, 0.0, 10.0, 20.0, 30.0}) {
      SeriesSpec s = series(SchemeId::kSbj, 0.5);
      s.overrides.rr_db = rr;
      s.label = "SBJ rr=" + format_db(rr);
      spec.series.push_back(s);
    }
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected fig3, fig4, fig6 or fig7)");
  }
  return spec;
}

AlphaSearch optimize_alpha(const LinkBudget& budget, TargetRate rate, const EstimatorConfig& cfg,
                           int grid_points, bool refine) {
  if (grid_points < 3) throw std::invalid_argument("optimize_alpha: grid_points must be >= 3");
  cfg.validate();

  AlphaSearch result;
  result.grid = uniform_grid(0.0, 1.0, grid_points);
  std::vector<OutageProbe> probes;
  probes.reserve(result.grid.size());
  for (double a : result.grid) probes.push_back({{SchemeId::kSbj, a}, budget});
  result.grid_estimates = estimate_sop_probes(probes, rate, cfg);

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.grid_estimates.size(); ++i) {
    if (result.grid_estimates[i].outages < result.grid_estimates[best].outages) best = i;
  }
  result.alpha_star = result.grid[best];
  result.estimate = result.grid_estimates[best];
  if (!refine) return result;

  auto objective = [&](double a) {
    return estimate_sop({SchemeId::kSbj, a}, budget, rate, cfg);
  };
  double lo = result.grid[best == 0 ? 0 : best - 1];
  double hi = result.grid[std::min(best + 1, result.grid.size() - 1)];

  double best_alpha = result.alpha_star;
  SopEstimate best_est = result.estimate;
  auto consider = [&](double a, const SopEstimate& e) {
    if (e.outages < best_est.outages ||
        (e.outages == best_est.outages && result.refined && a < best_alpha)) {
      best_alpha = a;
      best_est = e;
      result.refined = true;
    }
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  constexpr double kTolerance = 1e-3;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  SopEstimate fc = objective(c);
  SopEstimate fd = objective(d);
  consider(c, fc);
  consider(d, fd);
  while (hi - lo > kTolerance) {
    if (fc.outages <= fd.outages) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = objective(c);
      consider(c, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = objective(d);
      consider(d, fd);
    }
  }
  result.alpha_star = best_alpha;
  result.estimate = best_est;
  return result;
}

}  // namespace fdsec
