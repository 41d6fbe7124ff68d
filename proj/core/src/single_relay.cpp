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

#include "fdsec/single_relay.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdsec {
namespace {

inline double log2p1(double x) noexcept { return std::log2(1.0 + x); }

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("SbjParams: alpha must lie in [0, 1]");
  }
}

}  // namespace

double af_end_to_end_sinr(double first_hop, double second_hop) noexcept {
  return first_hop * second_hop / (first_hop + second_hop + 1.0);
}

double fd_relay_input_sinr(double gamma_sr, double gamma_rr) noexcept {
  return gamma_sr / (1.0 + gamma_rr);
}

double isi_eavesdropper_sinr(double gamma_se, double gamma_re) noexcept {
  const double sum = gamma_se + gamma_re;
  const double diff = gamma_se - gamma_re;
  return 0.5 * (sum - 1.0 + std::sqrt(1.0 + 2.0 * sum + diff * diff));
}

SinrPair sbj_sinrs(SbjParams params, double gamma_sr, double gamma_rd, double gamma_rr) {
  check_alpha(params.alpha);
  if (gamma_sr < 0.0 || gamma_rd < 0.0 || gamma_rr < 0.0) {
    throw std::invalid_argument("sbj_sinrs: SNRs must be >= 0");
  }
  if (gamma_sr == 0.0) return {};
  const double a = params.alpha;
  const double at_relay = a * gamma_sr / ((1.0 - a) * gamma_sr + gamma_rr + 1.0);
  const double amplified_li = gamma_rd * gamma_rr * (a * gamma_sr + 1.0) / (gamma_sr + 1.0);
  const double at_destination =
      a * gamma_sr * gamma_rd / (amplified_li + gamma_sr + gamma_rd + gamma_rr + 1.0);
  return {at_relay, at_destination};
}

SecrecySample sbj_evaluate(SbjParams params, const ChannelRealization& real) {
  const RelayLinks& r = real.primary();
  const SinrPair s = sbj_sinrs(params, r.sr, r.rd, r.rr);
  return make_secrecy_sample(log2p1(s.destination), log2p1(s.relay));
}

SecrecySample hdr_evaluate(const RelayLinks& relay, double gamma_se) noexcept {
  const double c_d = 0.5 * log2p1(af_end_to_end_sinr(relay.sr, relay.rd));
  const double c_e = 0.5 * log2p1(gamma_se + relay.re);
  return make_secrecy_sample(c_d, c_e);
}

SecrecySample hdr_evaluate(const ChannelRealization& real) {
  return hdr_evaluate(real.primary(), real.se);
}

SecrecySample fdr_evaluate(const RelayLinks& relay, double gamma_se) noexcept {
  const double input = fd_relay_input_sinr(relay.sr, relay.rr);
  const double c_d = log2p1(af_end_to_end_sinr(input, relay.rd));
  const double c_e = log2p1(isi_eavesdropper_sinr(gamma_se, relay.re));
  return make_secrecy_sample(c_d, c_e);
}

SecrecySample fdr_evaluate(const ChannelRealization& real) {
  return fdr_evaluate(real.primary(), real.se);
}

ModeSample hybrid_hd_fd_select(const RelayLinks& relay, double gamma_se) noexcept {
  const SecrecySample fd = fdr_evaluate(relay, gamma_se);
  const SecrecySample hd = hdr_evaluate(relay, gamma_se);
  if (fd.sc >= hd.sc) return {RelayMode::kFullDuplex, fd};
  return {RelayMode::kHalfDuplex, hd};
}

SecrecySample hybrid_hd_fd_evaluate(const ChannelRealization& real) {
  return hybrid_hd_fd_select(real.primary(), real.se).sample;
}

SecrecySample fdj_evaluate(const RelayLinks& relay, double gamma_se) noexcept {
  const double input = fd_relay_input_sinr(relay.sr, relay.rr);
  const double c_d = 0.5 * log2p1(af_end_to_end_sinr(input, relay.rd));
  const double jammed = gamma_se / (1.0 + relay.re) + relay.re / (1.0 + gamma_se);
  const double c_e = 0.5 * log2p1(jammed);
  return make_secrecy_sample(c_d, c_e);
}

SecrecySample fdj_evaluate(const ChannelRealization& real) {
  return fdj_evaluate(real.primary(), real.se);
}

}  // namespace fdsec
