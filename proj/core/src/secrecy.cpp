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

#include "fdsec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdsec {

TargetRate::TargetRate(double r0) : r0_(r0) {
  if (!std::isfinite(r0) || r0 < 0.0) {
    throw std::invalid_argument("TargetRate: r0 must be finite and >= 0");
  }
}

double capacity(double gamma) {
  if (!(gamma >= 0.0)) {
    throw std::invalid_argument("capacity: SNR must be >= 0");
  }
  return std::log2(1.0 + gamma);
}

double secrecy_capacity(double c_d, double c_e) { return std::max(0.0, c_d - c_e); }

SecrecySample make_secrecy_sample(double c_d, double c_e) {
  return {c_d, c_e, secrecy_capacity(c_d, c_e)};
}

bool outage_indicator(double sc, TargetRate rate) { return sc < rate.r0(); }

double direct_wiretap_sop(double gamma_d_bar, double gamma_e_bar, TargetRate rate) {
  if (!(gamma_d_bar > 0.0) || !std::isfinite(gamma_d_bar)) {
    throw std::invalid_argument("direct_wiretap_sop: gamma_d_bar must be > 0");
  }
  if (!(gamma_e_bar >= 0.0) || !std::isfinite(gamma_e_bar)) {
    throw std::invalid_argument("direct_wiretap_sop: gamma_e_bar must be >= 0");
  }
  const double rho = std::exp2(rate.r0());
  const double secure =
      gamma_d_bar / (gamma_d_bar + rho * gamma_e_bar) * std::exp(-(rho - 1.0) / gamma_d_bar);
  return 1.0 - secure;
}

}  // namespace fdsec
