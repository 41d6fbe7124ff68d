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

#include "fdsec/multi_relay.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fdsec {
namespace {

void require_relays(const ChannelRealization& real) {
  if (real.relays.empty()) {
    throw std::invalid_argument("relay selection needs at least one relay");
  }
}

// argmax over relays of score(i); strict '>' keeps the lowest index on ties.
template <typename Score>
std::size_t argmax_relay(const ChannelRealization& real, Score score) {
  std::size_t best = 0;
  double best_score = score(0);
  for (std::size_t i = 1; i < real.relays.size(); ++i) {
    const double s = score(i);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return best;
}

}  // namespace

SelectionResult select_random(const ChannelRealization& real, RandomStream& stream) {
  require_relays(real);
  const std::size_t k = real.relays.size();
  const double u = stream.next_uniform();
  const std::size_t index = std::min(k - 1, static_cast<std::size_t>(u * static_cast<double>(k)));
  return {index, RelayMode::kFullDuplex, fdr_evaluate(real.relays[index], real.se)};
}

SelectionResult select_max_min(const ChannelRealization& real) {
  require_relays(real);
  const std::size_t index = argmax_relay(real, [&](std::size_t i) {
    const RelayLinks& r = real.relays[i];
    return std::min(fd_relay_input_sinr(r.sr, r.rr), r.rd);
  });
  return {index, RelayMode::kFullDuplex, fdr_evaluate(real.relays[index], real.se)};
}

SelectionResult select_optimal_fd(const ChannelRealization& real) {
  require_relays(real);
  SelectionResult best{0, RelayMode::kFullDuplex, fdr_evaluate(real.relays[0], real.se)};
  for (std::size_t i = 1; i < real.relays.size(); ++i) {
    const SecrecySample s = fdr_evaluate(real.relays[i], real.se);
    if (s.sc > best.sample.sc) best = {i, RelayMode::kFullDuplex, s};
  }
  return best;
}

SelectionResult select_optimal_hd(const ChannelRealization& real) {
  require_relays(real);
  SelectionResult best{0, RelayMode::kHalfDuplex, hdr_evaluate(real.relays[0], real.se)};
  for (std::size_t i = 1; i < real.relays.size(); ++i) {
    const SecrecySample s = hdr_evaluate(real.relays[i], real.se);
    if (s.sc > best.sample.sc) best = {i, RelayMode::kHalfDuplex, s};
  }
  return best;
}

SelectionResult select_hybrid(const ChannelRealization& real) {
  require_relays(real);
  ModeSample first = hybrid_hd_fd_select(real.relays[0], real.se);
  SelectionResult best{0, first.mode, first.sample};
  for (std::size_t i = 1; i < real.relays.size(); ++i) {
    const ModeSample m = hybrid_hd_fd_select(real.relays[i], real.se);
    if (m.sample.sc > best.sample.sc) best = {i, m.mode, m.sample};
  }
  return best;
}

SecrecySample beamforming_idealized(const ChannelRealization& real) {
  if (real.relays.size() < 2) {
    throw std::invalid_argument("beamforming_idealized: nulling needs K >= 2 relays");
  }
  std::vector<double> snr(real.relays.size());
  std::transform(real.relays.begin(), real.relays.end(), snr.begin(), [](const RelayLinks& r) {
    return af_end_to_end_sinr(fd_relay_input_sinr(r.sr, r.rr), r.rd);
  });
  const auto dropped = std::min_element(snr.begin(), snr.end()) - snr.begin();
  double combined = 0.0;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(snr.size()); ++i) {
    if (i != dropped) combined += snr[static_cast<std::size_t>(i)];
  }
  return make_secrecy_sample(capacity(combined), capacity(real.se));
}

}  // namespace fdsec
