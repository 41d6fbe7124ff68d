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

#include <cstddef>
#include <vector>

#include "fdsec/random_stream.hpp"

namespace fdsec {

/// Converts decibels to a linear power ratio. Throws on non-finite input.
double db_to_linear(double x_db);

/// Inverse of db_to_linear. Zero maps to -inf.
double linear_to_db(double x);

/// Inverse-CDF draw from an exponential law: -mean * ln(u), u in (0, 1).
/// Zero when mean is zero.
double sample_exponential(double mean, double u);

enum class ChannelMode {
  kStochastic,
  /// Every draw equals its mean. Uniforms are still consumed.
  kDeterministic,
};

/// Average SNRs of the five link classes, in dB as given.
struct LinkDb {
  double sr = 0.0;
  double rd = 0.0;
  double se = 0.0;
  double re = 0.0;
  double rr = 0.0;

  friend bool operator==(const LinkDb&, const LinkDb&) = default;
};

/// Average link SNRs of a relay network, held both in dB and linear scale.
///
/// Links: source-relay (sr), relay-destination (rd), source-eavesdropper (se),
/// relay-eavesdropper (re) and residual loop interference at the relay (rr).
/// With several relays every relay shares the same averages.
class LinkBudget {
 public:
  static LinkBudget from_db(const LinkDb& db, int num_relays = 1,
                            ChannelMode mode = ChannelMode::kStochastic);
  /// Linear averages must be finite and >= 0; a zero mean has dB value -inf.
  static LinkBudget from_linear(double sr, double rd, double se, double re, double rr,
                                int num_relays = 1, ChannelMode mode = ChannelMode::kStochastic);

  double gamma_sr_bar() const noexcept { return sr_; }
  double gamma_rd_bar() const noexcept { return rd_; }
  double gamma_se_bar() const noexcept { return se_; }
  double gamma_re_bar() const noexcept { return re_; }
  double gamma_rr_bar() const noexcept { return rr_; }
  const LinkDb& db() const noexcept { return db_; }
  int num_relays() const noexcept { return num_relays_; }
  ChannelMode mode() const noexcept { return mode_; }

  LinkBudget with_db(const LinkDb& db) const { return from_db(db, num_relays_, mode_); }
  LinkBudget with_num_relays(int num_relays) const;
  LinkBudget with_mode(ChannelMode mode) const;

  /// Uniforms consumed by one call of sample_realization.
  std::size_t uniforms_per_realization() const noexcept;

  friend bool operator==(const LinkBudget&, const LinkBudget&) = default;

 private:
  LinkBudget() = default;
  void validate() const;

  LinkDb db_;
  double sr_ = 0.0, rd_ = 0.0, se_ = 0.0, re_ = 0.0, rr_ = 0.0;
  int num_relays_ = 1;
  ChannelMode mode_ = ChannelMode::kStochastic;
};

/// Instantaneous SNRs of the links touching one relay.
struct RelayLinks {
  double sr = 0.0;
  double rd = 0.0;
  double re = 0.0;
  double rr = 0.0;
};

/// One draw of every link SNR. `relays` holds K >= 1 entries; single-relay
/// schemes read relays[0]. The source-eavesdropper link is shared.
struct ChannelRealization {
  double se = 0.0;
  std::vector<RelayLinks> relays;

  const RelayLinks& primary() const { return relays.front(); }
  std::size_t num_relays() const noexcept { return relays.size(); }
};

/// Draws a realization under flat Rayleigh fading (exponential SNRs).
///
/// Uniform order: sr, rd, se, re, rr of relay 0, then sr, rd, re, rr of each
/// further relay in index order, so 5 + 4 (K - 1) uniforms per call in
/// either mode.
ChannelRealization sample_realization(const LinkBudget& budget, RandomStream& stream);

/// As sample_realization, reusing the storage of `out`.
void sample_realization_into(const LinkBudget& budget, RandomStream& stream,
                             ChannelRealization& out);

}  // namespace fdsec
