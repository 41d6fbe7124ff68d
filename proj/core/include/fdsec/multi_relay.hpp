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

#include "fdsec/channel.hpp"
#include "fdsec/random_stream.hpp"
#include "fdsec/secrecy.hpp"
#include "fdsec/single_relay.hpp"

namespace fdsec {

// Multi-relay realizations reuse ChannelRealization: K = relays.size() and
// a shared source-eavesdropper SNR. Inter-relay interference is not modeled.
// Every selection breaks ties toward the lowest relay index.

struct SelectionResult {
  std::size_t chosen_index = 0;
  RelayMode mode = RelayMode::kFullDuplex;
  SecrecySample sample;
};

/// Uniformly random relay, full duplex. Consumes one uniform from `stream`.
SelectionResult select_random(const ChannelRealization& real, RandomStream& stream);

/// Max-min FD selection: argmax_i min(sr_i / (1 + rr_i), rd_i). Needs no
/// wiretap CSI.
SelectionResult select_max_min(const ChannelRealization& real);

/// Relay with the largest FD secrecy capacity.
SelectionResult select_optimal_fd(const ChannelRealization& real);

/// Relay with the largest HD secrecy capacity.
SelectionResult select_optimal_hd(const ChannelRealization& real);

/// Each relay takes its better mode (ties to FD), then the best relay wins.
SelectionResult select_hybrid(const ChannelRealization& real);

/// Idealized zero-forcing relay beamforming.
///
/// Stand-in model, not a weight design: all relay paths are nulled at the
/// eavesdropper, so only the direct source leakage remains (c_e =
/// log2(1 + se)). Nulling costs one degree of freedom, so the weakest relay
/// is dropped and the FD end-to-end SINRs of the other K - 1 relays add
/// coherently at the destination. Throws std::invalid_argument when K < 2.
SecrecySample beamforming_idealized(const ChannelRealization& real);

}  // namespace fdsec
