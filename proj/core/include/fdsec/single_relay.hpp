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

#include "fdsec/channel.hpp"
#include "fdsec/secrecy.hpp"

namespace fdsec {

enum class RelayMode { kHalfDuplex, kFullDuplex };

/// Share of source power on the confidential signal; the rest carries the
/// source-emitted jamming noise.
struct SbjParams {
  double alpha = 0.5;
};

struct SinrPair {
  double relay = 0.0;        ///< at the untrusted relay
  double destination = 0.0;  ///< at the destination, after jamming cancellation
};

/// End-to-end SINR of a two-hop amplify-and-forward link, g1 g2 / (g1 + g2 + 1).
double af_end_to_end_sinr(double first_hop, double second_hop) noexcept;

/// SINR at a full-duplex relay input with residual loop interference.
double fd_relay_input_sinr(double gamma_sr, double gamma_rr) noexcept;

/// SINR equivalent of what an eavesdropper extracts from a full-duplex
/// relay hop, where the source and the delayed relay copy of the same
/// stream arrive together as a two-tap ISI channel.
///
/// With Gaussian inputs and ideal equalisation the rate is the spectral
/// average of log2(1 + se + re + 2 sqrt(se re) cos w), which integrates to
/// log2((1 + se + re + sqrt(1 + 2 (se + re) + (se - re)^2)) / 2). The value
/// lies between stronger-stream decoding, max(se/(1+re), re/(1+se)), and
/// maximum ratio combining, se + re.
double isi_eavesdropper_sinr(double gamma_se, double gamma_re) noexcept;

// Source-based jamming against an untrusted full-duplex relay.
//
//   relay:        a sr / ((1 - a) sr + rr + 1)
//   destination:  a sr rd / (rd rr (a sr + 1) / (sr + 1) + sr + rd + rr + 1)
//
// The destination knows the jamming sequence and cancels it; the relay does
// not. alpha = 1 is the conventional untrusted FD relay.
SinrPair sbj_sinrs(SbjParams params, double gamma_sr, double gamma_rd, double gamma_rr);

/// The relay is the eavesdropper. No 1/2 prelog: the relay is full duplex.
SecrecySample sbj_evaluate(SbjParams params, const ChannelRealization& real);

// Trusted relay with an external eavesdropper. These link models are
// AF-relaying model choices; only SBJ has closed forms in the source
// material, so comparisons that depend on the models are qualitative.

/// Half-duplex AF relay over two slots. The eavesdropper combines the
/// source slot and the relay slot by MRC.
SecrecySample hdr_evaluate(const RelayLinks& relay, double gamma_se) noexcept;
SecrecySample hdr_evaluate(const ChannelRealization& real);

/// Full-duplex AF relay. Residual loop interference adds to relay input
/// noise; the eavesdropper faces the ISI channel of isi_eavesdropper_sinr.
SecrecySample fdr_evaluate(const RelayLinks& relay, double gamma_se) noexcept;
SecrecySample fdr_evaluate(const ChannelRealization& real);

struct ModeSample {
  RelayMode mode = RelayMode::kFullDuplex;
  SecrecySample sample;
};

/// Picks the better of HD and FD on this realization; ties go to FD.
ModeSample hybrid_hd_fd_select(const RelayLinks& relay, double gamma_se) noexcept;
SecrecySample hybrid_hd_fd_evaluate(const ChannelRealization& real);

/// Full-duplex jamming. Phase 1: source transmits, relay jams the
/// eavesdropper (leaking into its own input through the residual loop).
/// Phase 2: relay forwards, source jams. Data flows half duplex; the
/// eavesdropper MRC-combines its two jammed observations.
SecrecySample fdj_evaluate(const RelayLinks& relay, double gamma_se) noexcept;
SecrecySample fdj_evaluate(const ChannelRealization& real);

}  // namespace fdsec
