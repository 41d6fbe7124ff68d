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

#include <optional>
#include <string>
#include <string_view>

#include "fdsec/channel.hpp"
#include "fdsec/random_stream.hpp"
#include "fdsec/secrecy.hpp"

namespace fdsec {

enum class SchemeId {
  // single relay, trusted relay and external eavesdropper
  kHdr,
  kFdr,
  kHybridHdFd,
  kFdj,
  // single relay, untrusted relay
  kSbj,
  kConventionalUntrustedFdr,
  // K relays
  kRandomRs,
  kMaxMinRs,
  kOptimalFdRs,
  kOptimalHdRs,
  kHybridRs,
  kBeamforming,
  // no relay: legitimate link = source-relay budget, wiretap = source-eavesdropper
  kDirectWiretap,
};

struct SchemeSpec {
  SchemeId id = SchemeId::kFdr;
  /// Power split for kSbj; ignored by every other scheme.
  double alpha = 1.0;

  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

/// Stable lowercase key used in configuration files, e.g. "o-fd-rs".
std::string_view scheme_key(SchemeId id);
std::optional<SchemeId> parse_scheme_key(std::string_view key);

/// Human label for plots and CSV rows, e.g. "SBJ(alpha=0.5)".
std::string scheme_label(const SchemeSpec& scheme);

/// Smallest relay count the scheme accepts.
int min_relays(SchemeId id) noexcept;

/// Throws std::invalid_argument on an out-of-range alpha.
void validate_scheme(const SchemeSpec& scheme);

/// Secrecy of one realization. `selection` is only read by kRandomRs.
SecrecySample evaluate_scheme(const SchemeSpec& scheme, const ChannelRealization& real,
                              RandomStream& selection);

}  // namespace fdsec
