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

#include "fdsec/scheme.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "fdsec/multi_relay.hpp"
#include "fdsec/single_relay.hpp"

namespace fdsec {
namespace {

struct SchemeName {
  SchemeId id;
  std::string_view key;
  std::string_view label;
};

constexpr std::array<SchemeName, 13> kNames = {{
    {SchemeId::kHdr, "hdr", "HDR"},
    {SchemeId::kFdr, "fdr", "FDR"},
    {SchemeId::kHybridHdFd, "hybrid-hd-fd", "H-HD-FDR"},
    {SchemeId::kFdj, "fdj", "FDJ"},
    {SchemeId::kSbj, "sbj", "SBJ"},
    {SchemeId::kConventionalUntrustedFdr, "conventional-fdr", "Conventional-FDR"},
    {SchemeId::kRandomRs, "random-rs", "Random-FD-RS"},
    {SchemeId::kMaxMinRs, "mm-fd-rs", "MM-FD-RS"},
    {SchemeId::kOptimalFdRs, "o-fd-rs", "O-FD-RS"},
    {SchemeId::kOptimalHdRs, "optimal-hd-rs", "Optimal-HD-RS"},
    {SchemeId::kHybridRs, "hybrid-rs", "H-HD-FD-RS"},
    {SchemeId::kBeamforming, "beamforming", "ZF-Beamforming"},
    {SchemeId::kDirectWiretap, "direct", "Direct-Wiretap"},
}};

const SchemeName& lookup(SchemeId id) {
  for (const SchemeName& n : kNames) {
    if (n.id == id) return n;
  }
  throw std::logic_error("unknown SchemeId");
}

}  // namespace

std::string_view scheme_key(SchemeId id) { return lookup(id).key; }

std::optional<SchemeId> parse_scheme_key(std::string_view key) {
  for (const SchemeName& n : kNames) {
    if (n.key == key) return n.id;
  }
  return std::nullopt;
}

std::string scheme_label(const SchemeSpec& scheme) {
  std::string label(lookup(scheme.id).label);
  if (scheme.id == SchemeId::kSbj) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "(alpha=%g)", scheme.alpha);
    label += buf;
  }
  return label;
}

int min_relays(SchemeId id) noexcept { return id == SchemeId::kBeamforming ? 2 : 1; }

void validate_scheme(const SchemeSpec& scheme) {
  if (scheme.id == SchemeId::kSbj && !(scheme.alpha >= 0.0 && scheme.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

SecrecySample evaluate_scheme(const SchemeSpec& scheme, const ChannelRealization& real,
                              RandomStream& selection) {
  switch (scheme.id) {
    case SchemeId::kHdr:
      return hdr_evaluate(real);
    case SchemeId::kFdr:
      return fdr_evaluate(real);
    case SchemeId::kHybridHdFd:
      return hybrid_hd_fd_evaluate(real);
    case SchemeId::kFdj:
      return fdj_evaluate(real);
    case SchemeId::kSbj:
      return sbj_evaluate(SbjParams{scheme.alpha}, real);
    case SchemeId::kConventionalUntrustedFdr:
      return sbj_evaluate(SbjParams{1.0}, real);
    case SchemeId::kRandomRs:
      return select_random(real, selection).sample;
    case SchemeId::kMaxMinRs:
      return select_max_min(real).sample;
    case SchemeId::kOptimalFdRs:
      return select_optimal_fd(real).sample;
    case SchemeId::kOptimalHdRs:
      return select_optimal_hd(real).sample;
    case SchemeId::kHybridRs:
      return select_hybrid(real).sample;
    case SchemeId::kBeamforming:
      return beamforming_idealized(real);
    case SchemeId::kDirectWiretap:
      return make_secrecy_sample(capacity(real.primary().sr), capacity(real.se));
  }
  throw std::logic_error("unhandled SchemeId");
}

}  // namespace fdsec
