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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "fdsec/multi_relay.hpp"
#include "fdsec/single_relay.hpp"

namespace fdsec {
namespace {

constexpr SchemeId kAll[] = {
    SchemeId::kHdr,          SchemeId::kFdr,         SchemeId::kHybridHdFd,
    SchemeId::kFdj,          SchemeId::kSbj,         SchemeId::kConventionalUntrustedFdr,
    SchemeId::kRandomRs,     SchemeId::kMaxMinRs,    SchemeId::kOptimalFdRs,
    SchemeId::kOptimalHdRs,  SchemeId::kHybridRs,    SchemeId::kBeamforming,
    SchemeId::kDirectWiretap};

TEST(SchemeKeys, RoundTripAndUnique) {
  std::set<std::string> keys, labels;
  for (SchemeId id : kAll) {
    const auto key = scheme_key(id);
    EXPECT_EQ(parse_scheme_key(key), id) << key;
    keys.insert(std::string(key));
    labels.insert(scheme_label({id, 0.5}));
  }
  EXPECT_EQ(keys.size(), std::size(kAll));
  EXPECT_EQ(labels.size(), std::size(kAll));
  EXPECT_FALSE(parse_scheme_key("FDR").has_value());
  EXPECT_FALSE(parse_scheme_key("").has_value());
}

TEST(SchemeKeys, Labels) {
  EXPECT_EQ(scheme_label({SchemeId::kSbj, 0.5}), "SBJ(alpha=0.5)");
  EXPECT_EQ(scheme_label({SchemeId::kSbj, 1.0}), "SBJ(alpha=1)");
  EXPECT_EQ(scheme_label({SchemeId::kOptimalFdRs}), "O-FD-RS");
  EXPECT_EQ(scheme_key(SchemeId::kMaxMinRs), "mm-fd-rs");
}

TEST(SchemeKeys, RelayRequirements) {
  EXPECT_EQ(min_relays(SchemeId::kBeamforming), 2);
  EXPECT_EQ(min_relays(SchemeId::kHybridRs), 1);
  EXPECT_NO_THROW(validate_scheme({SchemeId::kSbj, 0.0}));
  EXPECT_NO_THROW(validate_scheme({SchemeId::kFdr, 7.0}));
  EXPECT_THROW(validate_scheme({SchemeId::kSbj, -0.01}), std::invalid_argument);
}

TEST(EvaluateScheme, DispatchesToModels) {
  std::mt19937_64 gen(12);
  std::exponential_distribution<double> e(0.01);
  RandomStream sel(1, 1);
  for (int i = 0; i < 1000; ++i) {
    ChannelRealization r{e(gen), {}};
    for (int k = 0; k < 3; ++k) r.relays.push_back({e(gen), e(gen), e(gen), e(gen)});
    EXPECT_EQ(evaluate_scheme({SchemeId::kHdr}, r, sel).sc, hdr_evaluate(r).sc);
    EXPECT_EQ(evaluate_scheme({SchemeId::kFdr}, r, sel).sc, fdr_evaluate(r).sc);
    EXPECT_EQ(evaluate_scheme({SchemeId::kFdj}, r, sel).sc, fdj_evaluate(r).sc);
    EXPECT_EQ(evaluate_scheme({SchemeId::kSbj, 0.3}, r, sel).sc, sbj_evaluate({0.3}, r).sc);
    EXPECT_EQ(evaluate_scheme({SchemeId::kConventionalUntrustedFdr}, r, sel).sc, 0.0);
    EXPECT_EQ(evaluate_scheme({SchemeId::kOptimalHdRs}, r, sel).sc,
              select_optimal_hd(r).sample.sc);
    EXPECT_EQ(evaluate_scheme({SchemeId::kBeamforming}, r, sel).sc,
              beamforming_idealized(r).sc);
    EXPECT_DOUBLE_EQ(evaluate_scheme({SchemeId::kDirectWiretap}, r, sel).sc,
                     secrecy_capacity(capacity(r.relays[0].sr), capacity(r.se)));
  }
}

TEST(EvaluateScheme, OnlyRandomSelectionReadsStream) {
  ChannelRealization r{1.0, {{5, 5, 1, 1}, {6, 6, 1, 1}}};
  RandomStream sel(3, 3);
  for (SchemeId id : kAll) {
    if (id == SchemeId::kRandomRs) continue;
    evaluate_scheme({id, 0.5}, r, sel);
  }
  EXPECT_EQ(sel.position(), 0u);
  evaluate_scheme({SchemeId::kRandomRs}, r, sel);
  EXPECT_EQ(sel.position(), 1u);
}

}  // namespace
}  // namespace fdsec
