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
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fdsec/monte_carlo.hpp"
#include "fdsec/secrecy.hpp"

namespace fdsec::cli {

using OutageRule = std::function<bool(double sc, TargetRate rate)>;

struct ValidationOptions {
  /// Comparator under test by the boundary check; swap it to mutation-test
  /// the suite.
  OutageRule outage = outage_indicator;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

/// Built-in oracle suite: outage boundary, closed-form wiretap SOP against
/// quadrature and Monte Carlo, untrusted-relay zero secrecy, SBJ alpha
/// endpoints, CRN dominance of hybrid and selection schemes, and
/// worker-count independence.
ValidationReport run_validation(const ValidationOptions& options = {});

/// SOP of the direct Rayleigh wiretap link by numerical integration over
/// the eavesdropper SNR density (exp-sinh quadrature).
double direct_wiretap_sop_quadrature(double gamma_d_bar, double gamma_e_bar, double r0);

void print_report(const ValidationReport& report, std::ostream& out);

}  // namespace fdsec::cli
