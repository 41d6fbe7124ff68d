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

#include "fdsec/cli/validate.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <span>
#include <vector>

#include "fdsec/channel.hpp"
#include "fdsec/experiments.hpp"
#include "fdsec/random_stream.hpp"
#include "fdsec/single_relay.hpp"

namespace fdsec::cli {
namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

ValidationCheck check_boundary(const OutageRule& outage) {
  struct Case {
    double sc, r0;
    bool expected;
  };
  const Case cases[] = {
      {1.0, 1.0, false}, {2.0, 2.0, false}, {0.0, 0.0, false},
      {std::nextafter(1.0, 0.0), 1.0, true}, {0.5, 1.0, true}, {2.0, 1.0, false},
  };
  for (const Case& c : cases) {
    if (outage(c.sc, TargetRate(c.r0)) != c.expected) {
      return {"outage-boundary", false,
              fmt("sc=%.17g r0=%g: expected ", c.sc, c.r0) +
                  (c.expected ? "an outage" : "no outage")};
    }
  }
  return {"outage-boundary", true, "ties are secure, sc < r0 is an outage"};
}

ValidationCheck check_wiretap_quadrature() {
  const double gd[] = {0.5, 1.0, 10.0, 100.0, 1000.0};
  const double ge[] = {0.1, 0.5, 1.0, 10.0, 100.0};
  const double r0[] = {0.5, 1.0, 2.0};
  double worst = 0.0;
  for (double d : gd) {
    for (double e : ge) {
      for (double r : r0) {
        const double closed = direct_wiretap_sop(d, e, TargetRate(r));
        worst = std::max(worst, std::abs(closed - direct_wiretap_sop_quadrature(d, e, r)));
      }
    }
  }
  return {"wiretap-oracle-quadrature", worst <= 1e-6,
          fmt("max |closed form - quadrature| = %.3g over 75 points (tol 1e-6)", worst)};
}

ValidationCheck check_wiretap_monte_carlo(std::uint64_t n, std::uint64_t seed) {
  const LinkBudget budget = LinkBudget::from_linear(10.0, 1.0, 1.0, 1.0, 1.0);
  const TargetRate rate(1.0);
  EstimatorConfig cfg;
  cfg.n_samples = n;
  cfg.seed = seed;
  const SopEstimate est = estimate_sop({SchemeId::kDirectWiretap}, budget, rate, cfg);
  const double exact = direct_wiretap_sop(10.0, 1.0, rate);
  const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(n));
  const double err = std::abs(est.p_hat - exact);
  return {"wiretap-monte-carlo", err < 3.0 * sigma,
          fmt("p_hat=%.6f exact=%.6f |err|/sigma=%.2f (< 3)", est.p_hat, exact, err / sigma)};
}

ValidationCheck check_untrusted_relay(std::uint64_t n, std::uint64_t seed) {
  RandomStream stream(seed, 0xA11CE);
  std::uint64_t violations = 0;
  const double rr_db[] = {-10.0, 0.0, 10.0, 20.0, 30.0, 40.0};
  for (std::uint64_t i = 0; i < n; ++i) {
    const LinkBudget budget =
        LinkBudget::from_db({40.0, 40.0, 10.0, 10.0, rr_db[i % std::size(rr_db)]});
    const ChannelRealization real = sample_realization(budget, stream);
    const SecrecySample s = sbj_evaluate(SbjParams{1.0}, real);
    const SinrPair sinr = sbj_sinrs(SbjParams{1.0}, real.primary().sr, real.primary().rd,
                                    real.primary().rr);
    if (s.sc != 0.0 || sinr.destination > sinr.relay) ++violations;
  }
  EstimatorConfig cfg;
  cfg.n_samples = n;
  cfg.seed = seed;
  const SopEstimate est = estimate_sop({SchemeId::kConventionalUntrustedFdr},
                                       LinkBudget::from_db({40.0, 40.0, 10.0, 10.0, 0.0}),
                                       TargetRate(1.0), cfg);
  const bool ok = violations == 0 && est.p_hat == 1.0;
  return {"untrusted-relay-zero-secrecy", ok,
          fmt("%g realizations with sc > 0, SOP = %.6f (must be exactly 1)",
              static_cast<double>(violations), est.p_hat)};
}

ValidationCheck check_sbj_endpoints(std::uint64_t n, std::uint64_t seed) {
  EstimatorConfig cfg;
  cfg.n_samples = n;
  cfg.seed = seed;
  const LinkBudget budget = LinkBudget::from_db({40.0, 40.0, 10.0, 10.0, -10.0});
  const SchemeSpec schemes[] = {{SchemeId::kSbj, 0.0}, {SchemeId::kSbj, 1.0}};
  const auto est = estimate_sop_crn(schemes, budget, TargetRate(1.0), cfg);
  const bool ok = est[0].p_hat == 1.0 && est[1].p_hat == 1.0;
  return {"sbj-alpha-endpoints", ok,
          fmt("SOP(alpha=0)=%.6f SOP(alpha=1)=%.6f (both exactly 1)", est[0].p_hat, est[1].p_hat)};
}

ValidationCheck check_hybrid_dominance(std::uint64_t n, std::uint64_t seed) {
  EstimatorConfig cfg;
  cfg.n_samples = n;
  cfg.seed = seed;
  const LinkBudget budget = LinkBudget::from_db({40.0, 40.0, 10.0, 10.0, 15.0});
  const SchemeSpec schemes[] = {{SchemeId::kHdr}, {SchemeId::kFdr}, {SchemeId::kHybridHdFd}};
  const auto est = estimate_sop_crn(schemes, budget, TargetRate(1.0), cfg);
  const bool ok = est[2].outages <= std::min(est[0].outages, est[1].outages);
  return {"hybrid-dominance-crn", ok,
          fmt("HDR=%.6f FDR=%.6f H-HD-FDR=%.6f", est[0].p_hat, est[1].p_hat, est[2].p_hat)};
}

ValidationCheck check_selection_dominance(std::uint64_t n, std::uint64_t seed) {
  EstimatorConfig cfg;
  cfg.n_samples = n;
  cfg.seed = seed;
  const LinkBudget budget = LinkBudget::from_db({30.0, 30.0, 10.0, 10.0, 10.0}, 4);
  const SchemeSpec schemes[] = {{SchemeId::kRandomRs},    {SchemeId::kMaxMinRs},
                                {SchemeId::kOptimalFdRs}, {SchemeId::kOptimalHdRs},
                                {SchemeId::kHybridRs}};
  const auto est = estimate_sop_crn(schemes, budget, TargetRate(1.0), cfg);
  const bool ok = est[2].outages <= est[1].outages && est[2].outages <= est[0].outages &&
                  est[4].outages <= std::min(est[2].outages, est[3].outages);
  return {"selection-dominance-crn", ok,
          fmt("random=%.6f MM=%.6f O-FD=%.6f", est[0].p_hat, est[1].p_hat, est[2].p_hat) +
              fmt(" opt-HD=%.6f hybrid=%.6f", est[3].p_hat, est[4].p_hat)};
}

ValidationCheck check_parallel_determinism(std::uint64_t n, std::uint64_t seed) {
  EstimatorConfig cfg;
  cfg.n_samples = n;
  cfg.seed = seed;
  cfg.batch_size = 1000;
  const LinkBudget budget = LinkBudget::from_db({30.0, 30.0, 10.0, 10.0, 10.0}, 4);
  const SchemeSpec schemes[] = {{SchemeId::kRandomRs}, {SchemeId::kHybridRs}};
  cfg.workers = 1;
  const auto serial = estimate_sop_crn(schemes, budget, TargetRate(1.0), cfg);
  cfg.workers = 7;
  const auto parallel = estimate_sop_crn(schemes, budget, TargetRate(1.0), cfg);
  return {"parallel-determinism", serial == parallel,
          serial == parallel ? "1 and 7 workers agree bit for bit" : "worker count changed results"};
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

double direct_wiretap_sop_quadrature(double gamma_d_bar, double gamma_e_bar, double r0) {
  const double rho = std::exp2(r0);
  if (gamma_e_bar == 0.0) return 1.0 - std::exp(-(rho - 1.0) / gamma_d_bar);
  // t = y / gamma_e: P(outage | y) = 1 - exp(-(rho (1 + y) - 1) / gamma_d)
  auto integrand = [&](double t) {
    const double y = gamma_e_bar * t;
    return std::exp(-t) * -std::expm1(-(rho * (1.0 + y) - 1.0) / gamma_d_bar);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), 1e-13);
}

ValidationReport run_validation(const ValidationOptions& options) {
  ValidationReport report;
  const std::uint64_t n = options.samples;
  const std::uint64_t seed = options.seed;
  auto guarded = [&](const char* name, auto&& check) {
    try {
      report.checks.push_back(check());
    } catch (const std::exception& e) {
      report.checks.push_back({name, false, std::string("threw: ") + e.what()});
    }
  };
  guarded("outage-boundary", [&] { return check_boundary(options.outage); });
  guarded("wiretap-oracle-quadrature", [&] { return check_wiretap_quadrature(); });
  guarded("wiretap-monte-carlo", [&] { return check_wiretap_monte_carlo(n, seed); });
  guarded("untrusted-relay-zero-secrecy", [&] { return check_untrusted_relay(n, seed); });
  guarded("sbj-alpha-endpoints", [&] { return check_sbj_endpoints(n, seed); });
  guarded("hybrid-dominance-crn", [&] { return check_hybrid_dominance(n, seed); });
  guarded("selection-dominance-crn", [&] { return check_selection_dominance(n, seed); });
  guarded("parallel-determinism", [&] { return check_parallel_determinism(n, seed); });
  return report;
}

void print_report(const ValidationReport& report, std::ostream& out) {
  std::size_t passed = 0;
  for (const ValidationCheck& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
    passed += c.passed ? 1 : 0;
  }
  out << passed << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace fdsec::cli
