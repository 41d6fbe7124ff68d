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

namespace fdsec {

/// Capacities of one realization, in bits per channel use.
struct SecrecySample {
  double c_d = 0.0;  ///< legitimate destination
  double c_e = 0.0;  ///< eavesdropper
  double sc = 0.0;   ///< max(0, c_d - c_e)
};

/// Target secrecy rate R0 in bits per channel use.
class TargetRate {
 public:
  /// Throws std::invalid_argument unless r0 is finite and >= 0.
  explicit TargetRate(double r0);
  double r0() const noexcept { return r0_; }

 private:
  double r0_;
};

/// log2(1 + gamma). Throws on negative or NaN input.
double capacity(double gamma);

/// max(0, c_d - c_e).
double secrecy_capacity(double c_d, double c_e);

SecrecySample make_secrecy_sample(double c_d, double c_e);

/// A secrecy outage occurs when the target rate exceeds the secrecy
/// capacity. A tie is not an outage.
bool outage_indicator(double sc, TargetRate rate);

/// Closed-form secrecy outage probability of a direct Rayleigh wiretap link
/// with average SNRs gamma_d_bar (legitimate) and gamma_e_bar (eavesdropper):
///
///   1 - gamma_d / (gamma_d + 2^r0 gamma_e) * exp(-(2^r0 - 1) / gamma_d)
///
/// Throws if gamma_d_bar <= 0 or gamma_e_bar < 0.
double direct_wiretap_sop(double gamma_d_bar, double gamma_e_bar, TargetRate rate);

}  // namespace fdsec
