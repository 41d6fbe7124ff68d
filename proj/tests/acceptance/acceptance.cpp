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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <string>
#include <vector>

#include "fdsec/cli/validate.hpp"
#include "fdsec/experiments.hpp"
#include "fdsec/monte_carlo.hpp"

namespace {

using namespace fdsec;
namespace fs = std::filesystem;

constexpr std::uint64_t kSamples = 100000;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Rows of one label, in grid order.
std::vector<OutputRow> series_rows(const std::vector<OutputRow>& rows, const std::string& label) {
  std::vector<OutputRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
               [&](const OutputRow& r) { return r.scheme == label; });
  return out;
}

const OutputRow& at(const std::vector<OutputRow>& rows, const std::string& label, double x) {
  for (const OutputRow& r : rows) {
    if (r.scheme == label && r.x_value == x) return r;
  }
  std::fprintf(stderr, "missing row %s @ %g\n", label.c_str(), x);
  std::abort();
}

SweepSpec preset(const char* name, double r0 = 1.0) {
  SweepSpec s = make_preset(name);
  s.estimator.n_samples = kSamples;
  s.rate = TargetRate(r0);
  return s;
}

struct Sweeps {
  std::vector<OutputRow> fig3, fig3_rate2, fig4, fig6;
  double fig6_seconds = 0.0;
};

Outcome untrusted_zero_secrecy(const Sweeps& s) {
  const auto rows = series_rows(s.fig6, "Conventional-FDR");
  const bool all_one = rows.size() == 11 && std::all_of(rows.begin(), rows.end(), [](auto& r) {
                         return r.sop == 1.0 && r.n == kSamples;
                       });
  return {all_one && s.fig6_seconds < 30.0,
          fmt("%zu points, all SOP == 1: %s, fig6 sweep %.2f s (limit 30 s)", rows.size(),
              all_one ? "yes" : "no", s.fig6_seconds)};
}

Outcome sbj_improvement(const Sweeps& s) {
  const auto rows = series_rows(s.fig6, "SBJ(alpha=0.5)");
  const double at0 = at(s.fig6, "SBJ(alpha=0.5)", 0.0).sop;
  int violations = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i].sop >= rows[i - 1].sop;
    const bool overlap = rows[i].ci_hi >= rows[i - 1].ci_lo;
    if (!ordered && !overlap) ++violations;
  }
  return {at0 < 0.9 && violations == 0 && rows.size() == 11,
          fmt("SOP(rr=0dB) = %.6f (< 0.9), monotonicity violations = %d, SOP range %.6f..%.6f",
              at0, violations, rows.front().sop, rows.back().sop)};
}

Outcome cross_link_asymmetry() {
  const LinkBudget weak_sr = LinkBudget::from_db({20, 40, 10, 10, 20});
  const LinkBudget weak_rd = LinkBudget::from_db({40, 20, 10, 10, 20});
  const OutageProbe probes[] = {{{SchemeId::kSbj, 0.5}, weak_sr}, {{SchemeId::kSbj, 0.5}, weak_rd}};
  EstimatorConfig cfg;
  cfg.n_samples = kSamples;
  const auto e = estimate_sop_probes(probes, TargetRate(1.0), cfg);
  return {e[0].p_hat > e[1].p_hat && e[0].ci_lo > e[1].ci_hi,
          fmt("SOP(sr=20,rd=40) = %.6f [%.6f, %.6f] vs SOP(sr=40,rd=20) = %.6f [%.6f, %.6f]",
              e[0].p_hat, e[0].ci_lo, e[0].ci_hi, e[1].p_hat, e[1].ci_lo, e[1].ci_hi)};
}

Outcome optimal_alpha() {
  EstimatorConfig cfg;
  cfg.n_samples = kSamples;
  const auto low = optimize_alpha(LinkBudget::from_db({40, 40, 10, 10, -10}), TargetRate(1.0),
                                  cfg, 21, true);
  const auto high = optimize_alpha(LinkBudget::from_db({40, 40, 10, 10, 30}), TargetRate(1.0),
                                   cfg, 21, true);
  auto endpoints_one = [](const AlphaSearch& a) {
    return a.grid.front() == 0.0 && a.grid.back() == 1.0 && a.grid_estimates.front().p_hat == 1.0 &&
           a.grid_estimates.back().p_hat == 1.0;
  };
  const bool ends = endpoints_one(low) && endpoints_one(high);
  return {low.alpha_star >= 0.4 && low.alpha_star <= 0.6 && high.alpha_star < 0.4 && ends,
          fmt("alpha*(rr=-10dB) = %.4f in [0.4, 0.6], alpha*(rr=30dB) = %.4f < 0.4, "
              "SOP(0) = SOP(1) = 1: %s",
              low.alpha_star, high.alpha_star, ends ? "yes" : "no")};
}

Outcome hybrid_dominance(const Sweeps& s) {
  int bad = 0, points = 0;
  for (const auto& h : series_rows(s.fig3, "H-HD-FDR")) {
    ++points;
    const double fd = at(s.fig3, "FDR", h.x_value).sop, hd = at(s.fig3, "HDR", h.x_value).sop;
    if (h.sop > std::min(fd, hd)) ++bad;
  }
  for (const auto& h : series_rows(s.fig4, "H-HD-FD-RS")) {
    ++points;
    const double fd = at(s.fig4, "O-FD-RS", h.x_value).sop;
    const double hd = at(s.fig4, "Optimal-HD-RS", h.x_value).sop;
    if (h.sop > std::min(fd, hd)) ++bad;
  }
  return {bad == 0 && points == 22, fmt("%d of %d grid points violate dominance", bad, points)};
}

Outcome selection_ordering(const Sweeps& s) {
  int bad = 0, points = 0;
  for (const auto& o : series_rows(s.fig4, "O-FD-RS")) {
    ++points;
    const double mm = at(s.fig4, "MM-FD-RS", o.x_value).sop;
    const double rnd = at(s.fig4, "Random-FD-RS", o.x_value).sop;
    if (!(o.sop <= mm && mm <= rnd)) ++bad;
  }
  const double x = 20.0;
  return {bad == 0 && points == 11,
          fmt("%d of %d grid points out of order; at rr=20dB O-FD %.6f, MM %.6f, random %.6f",
              bad, points, at(s.fig4, "O-FD-RS", x).sop, at(s.fig4, "MM-FD-RS", x).sop,
              at(s.fig4, "Random-FD-RS", x).sop)};
}

Outcome fdr_hdr_crossover(const Sweeps& s) {
  const double fd_lo = at(s.fig3, "FDR", -10).sop, hd_lo = at(s.fig3, "HDR", -10).sop;
  const double fd_hi = at(s.fig3, "FDR", 40).sop, hd_hi = at(s.fig3, "HDR", 40).sop;
  return {fd_lo < hd_lo && fd_hi > hd_hi,
          fmt("rr=-10dB: FDR %.6f < HDR %.6f; rr=40dB: FDR %.6f > HDR %.6f", fd_lo, hd_lo, fd_hi,
              hd_hi)};
}

Outcome fdj_rate_sensitivity(const Sweeps& s) {
  const double fdj1 = at(s.fig3, "FDJ", -10).sop, fdr1 = at(s.fig3, "FDR", -10).sop;
  const double fdj2 = at(s.fig3_rate2, "FDJ", -10).sop, fdr2 = at(s.fig3_rate2, "FDR", -10).sop;
  return {fdj1 < fdr1 && fdj2 > fdr2,
          fmt("rr=-10dB, R0=1: FDJ %.6f < FDR %.6f; R0=2: FDJ %.6f > FDR %.6f", fdj1, fdr1, fdj2,
              fdr2)};
}

Outcome estimator_soundness() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_z = 0.0, worst_quad = 0.0;
  const TargetRate rate(1.0);
  for (double gd_db : {0.0, 10.0, 20.0}) {
    for (double ge_db : {-10.0, 0.0, 10.0}) {
      const LinkBudget b = LinkBudget::from_db({gd_db, 0, ge_db, 0, 0});
      const double p = direct_wiretap_sop(b.gamma_sr_bar(), b.gamma_se_bar(), rate);
      const double quad =
          cli::direct_wiretap_sop_quadrature(b.gamma_sr_bar(), b.gamma_se_bar(), rate.r0());
      worst_quad = std::max(worst_quad, std::abs(quad - p));
      EstimatorConfig cfg;
      cfg.n_samples = kSamples;
      const SopEstimate e = estimate_sop({SchemeId::kDirectWiretap}, b, rate, cfg);
      const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(kSamples));
      worst_z = std::max(worst_z, std::abs(e.p_hat - p) / se);
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst_z <= 3.0 && worst_quad <= 1e-6 && elapsed < 60.0,
          fmt("max |z| = %.3f (limit 3), max |oracle - quadrature| = %.2e (limit 1e-6), %.2f s",
              worst_z, worst_quad, elapsed)};
}

int run_cli(const std::string& threads, const fs::path& out) {
  const std::string cmd = "FDSEC_THREADS=" + threads + " " + FDSEC_CLI_PATH +
                          " sweep --preset fig3 --seed 7 --out " + out.string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "fdsec_acceptance";
  fs::create_directories(dir);
  const fs::path serial = dir / "serial.csv", parallel = dir / "parallel.csv";
  const int a = run_cli("1", serial);
  const int b = run_cli("16", parallel);
  const std::string sa = slurp(serial), sb = slurp(parallel);
  fs::remove_all(dir);
  return {a == 0 && b == 0 && !sa.empty() && sa == sb,
          fmt("exit codes %d/%d, %zu vs %zu bytes, identical: %s (1 vs 16 workers)", a, b,
              sa.size(), sb.size(), sa == sb ? "yes" : "no")};
}

}  // namespace

int main() {
  Sweeps s;
  const auto t0 = std::chrono::steady_clock::now();
  s.fig6 = run_sweep(preset("fig6"));
  s.fig6_seconds = seconds_since(t0);
  s.fig3 = run_sweep(preset("fig3"));
  s.fig3_rate2 = run_sweep(preset("fig3", 2.0));
  s.fig4 = run_sweep(preset("fig4"));

  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"untrusted-relay-zero-secrecy", [&] { return untrusted_zero_secrecy(s); }},
      {"sbj-improvement", [&] { return sbj_improvement(s); }},
      {"cross-link-asymmetry", cross_link_asymmetry},
      {"optimal-alpha", optimal_alpha},
      {"hybrid-dominance", [&] { return hybrid_dominance(s); }},
      {"selection-ordering", [&] { return selection_ordering(s); }},
      {"fdr-hdr-crossover", [&] { return fdr_hdr_crossover(s); }},
      {"fdj-rate-sensitivity", [&] { return fdj_rate_sensitivity(s); }},
      {"estimator-soundness", estimator_soundness},
      {"determinism", determinism},
  };

  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    const Outcome o = c.check();
    failed += o.passed ? 0 : 1;
    std::printf("%s %2d %-30s %s\n", o.passed ? "PASS" : "FAIL", ++index, c.name, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
