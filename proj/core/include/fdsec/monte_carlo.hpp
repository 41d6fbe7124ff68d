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

#include <cstdint>
#include <span>
#include <vector>

#include "fdsec/channel.hpp"
#include "fdsec/scheme.hpp"
#include "fdsec/secrecy.hpp"

namespace fdsec {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr std::uint64_t kDefaultBatchSize = 4096;

/// Environment variable holding the worker count. Unset means all hardware
/// threads; "1" runs serially. Results do not depend on it.
inline constexpr const char* kWorkersEnvVar = "FDSEC_THREADS";

struct EstimatorConfig {
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t batch_size = kDefaultBatchSize;
  /// Batch b reads channel substream (substream_block << 32) | b. Sweeps use
  /// the grid index here so every grid point gets its own realizations.
  std::uint32_t substream_block = 0;
  /// 0 defers to kWorkersEnvVar.
  unsigned workers = 0;

  void validate() const;
};

struct SopEstimate {
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t outages = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SopEstimate&, const SopEstimate&) = default;
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

inline constexpr double kWilsonZ95 = 1.959964;

/// 95% Wilson score interval. Exact 0 / 1 at the boundaries.
WilsonInterval wilson_interval(double p_hat, std::uint64_t n);

SopEstimate make_sop_estimate(std::uint64_t outages, std::uint64_t n, std::uint64_t seed);

/// One curve of a common-random-number comparison: a scheme under a budget.
struct OutageProbe {
  SchemeSpec scheme;
  LinkBudget budget;
};

/// Estimates the SOP of every probe on one shared realization sequence.
///
/// Per sample, each probe's realization is drawn from a copy of the same
/// channel stream, so probes differing only in averages see the same
/// uniforms; the stream then advances by the largest per-probe consumption.
/// Random relay selection reads a separate stream (channel substream with
/// the top bit set), one uniform per sample shared by all probes.
///
/// Outages are integer counts per batch, so the result is bit-identical for
/// any worker count and scheduling order.
std::vector<SopEstimate> estimate_sop_probes(std::span<const OutageProbe> probes, TargetRate rate,
                                             const EstimatorConfig& cfg);

SopEstimate estimate_sop(const SchemeSpec& scheme, const LinkBudget& budget, TargetRate rate,
                         const EstimatorConfig& cfg);

/// Common random numbers across `schemes`.
std::vector<SopEstimate> estimate_sop_crn(std::span<const SchemeSpec> schemes,
                                          const LinkBudget& budget, TargetRate rate,
                                          const EstimatorConfig& cfg);

/// Resolves a requested worker count (0 = from kWorkersEnvVar, else all
/// hardware threads). Throws std::invalid_argument on a malformed variable.
unsigned resolve_workers(unsigned requested);

}  // namespace fdsec
