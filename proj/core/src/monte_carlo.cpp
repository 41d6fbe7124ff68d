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

#include "fdsec/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "fdsec/random_stream.hpp"

namespace fdsec {
namespace {

constexpr std::uint64_t kSelectionBit = std::uint64_t{1} << 63;

std::uint64_t channel_substream(const EstimatorConfig& cfg, std::uint64_t batch) {
  return (static_cast<std::uint64_t>(cfg.substream_block) << 32) | batch;
}

// Probes sharing a budget share one realization per sample.
struct BudgetGroup {
  LinkBudget budget;
  std::vector<std::size_t> probes;
};

std::vector<BudgetGroup> group_by_budget(std::span<const OutageProbe> probes) {
  std::vector<BudgetGroup> groups;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const BudgetGroup& g) { return g.budget == probes[i].budget; });
    if (it == groups.end()) {
      groups.push_back({probes[i].budget, {i}});
    } else {
      it->probes.push_back(i);
    }
  }
  return groups;
}

void run_batch(std::span<const OutageProbe> probes, const std::vector<BudgetGroup>& groups,
               TargetRate rate, const EstimatorConfig& cfg, std::uint64_t batch,
               std::span<std::uint64_t> counts) {
  const std::uint64_t first = batch * cfg.batch_size;
  const std::uint64_t size = std::min(cfg.batch_size, cfg.n_samples - first);
  const std::uint64_t substream = channel_substream(cfg, batch);

  RandomStream channel(cfg.seed, substream);
  RandomStream selection(cfg.seed, substream | kSelectionBit);
  std::vector<ChannelRealization> realizations(groups.size());

  for (std::uint64_t s = 0; s < size; ++s) {
    RandomStream furthest = channel;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      RandomStream local = channel;
      sample_realization_into(groups[g].budget, local, realizations[g]);
      if (local.position() > furthest.position()) furthest = local;
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t p : groups[g].probes) {
        RandomStream pick = selection;
        const SecrecySample sample = evaluate_scheme(probes[p].scheme, realizations[g], pick);
        if (outage_indicator(sample.sc, rate)) ++counts[p];
      }
    }
    channel = furthest;
    selection.next_uniform();
  }
}

}  // namespace

void EstimatorConfig::validate() const {
  if (n_samples == 0) throw std::invalid_argument("EstimatorConfig: n_samples must be >= 1");
  if (batch_size == 0) throw std::invalid_argument("EstimatorConfig: batch_size must be >= 1");
  const std::uint64_t batches = (n_samples - 1) / batch_size + 1;
  if (batches > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("EstimatorConfig: more than 2^32 batches; raise batch_size");
  }
}

WilsonInterval wilson_interval(double p_hat, std::uint64_t n) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw std::invalid_argument("wilson_interval: p_hat must lie in [0, 1]");
  }
  if (n == 0) throw std::invalid_argument("wilson_interval: n must be >= 1");
  const double z = kWilsonZ95;
  const double nn = static_cast<double>(n);
  const double z2n = z * z / nn;
  const double denom = 1.0 + z2n;
  const double center = (p_hat + 0.5 * z2n) / denom;
  const double half = z / denom * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2n / (4.0 * nn));
  WilsonInterval ci{center - half, center + half};
  ci.lo = p_hat == 0.0 ? 0.0 : std::clamp(ci.lo, 0.0, p_hat);
  ci.hi = p_hat == 1.0 ? 1.0 : std::clamp(ci.hi, p_hat, 1.0);
  return ci;
}

SopEstimate make_sop_estimate(std::uint64_t outages, std::uint64_t n, std::uint64_t seed) {
  if (outages > n) throw std::invalid_argument("make_sop_estimate: outages > n");
  SopEstimate e;
  e.outages = outages;
  e.n = n;
  e.seed = seed;
  e.p_hat = static_cast<double>(outages) / static_cast<double>(n);
  const WilsonInterval ci = wilson_interval(e.p_hat, n);
  e.ci_lo = ci.lo;
  e.ci_hi = ci.hi;
  return e;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kWorkersEnvVar); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value == 0 || value > 4096) {
      throw std::invalid_argument(std::string(kWorkersEnvVar) +
                                  " must be a positive integer, got '" + env + "'");
    }
    return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SopEstimate> estimate_sop_probes(std::span<const OutageProbe> probes, TargetRate rate,
                                             const EstimatorConfig& cfg) {
  cfg.validate();
  if (probes.empty()) throw std::invalid_argument("estimate_sop: empty scheme list");
  for (const OutageProbe& p : probes) {
    validate_scheme(p.scheme);
    if (p.budget.num_relays() < min_relays(p.scheme.id)) {
      throw std::invalid_argument("scheme " + scheme_label(p.scheme) + " needs at least " +
                                  std::to_string(min_relays(p.scheme.id)) + " relays");
    }
  }

  const std::vector<BudgetGroup> groups = group_by_budget(probes);
  const std::uint64_t n_batches = (cfg.n_samples - 1) / cfg.batch_size + 1;
  const std::size_t width = probes.size();
  std::vector<std::uint64_t> per_batch(static_cast<std::size_t>(n_batches) * width, 0);

  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(cfg.workers), n_batches));

  auto batch_span = [&](std::uint64_t b) {
    return std::span<std::uint64_t>(per_batch).subspan(static_cast<std::size_t>(b) * width, width);
  };

  if (workers <= 1) {
    for (std::uint64_t b = 0; b < n_batches; ++b) {
      run_batch(probes, groups, rate, cfg, b, batch_span(b));
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::uint64_t b = next++; b < n_batches; b = next++) {
            run_batch(probes, groups, rate, cfg, b, batch_span(b));
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<SopEstimate> out;
  out.reserve(width);
  for (std::size_t p = 0; p < width; ++p) {
    std::uint64_t outages = 0;
    for (std::uint64_t b = 0; b < n_batches; ++b) outages += per_batch[b * width + p];
    out.push_back(make_sop_estimate(outages, cfg.n_samples, cfg.seed));
  }
  return out;
}

SopEstimate estimate_sop(const SchemeSpec& scheme, const LinkBudget& budget, TargetRate rate,
                         const EstimatorConfig& cfg) {
  const OutageProbe probe{scheme, budget};
  return estimate_sop_probes(std::span(&probe, 1), rate, cfg).front();
}

std::vector<SopEstimate> estimate_sop_crn(std::span<const SchemeSpec> schemes,
                                          const LinkBudget& budget, TargetRate rate,
                                          const EstimatorConfig& cfg) {
  std::vector<OutageProbe> probes;
  probes.reserve(schemes.size());
  for (const SchemeSpec& s : schemes) probes.push_back({s, budget});
  return estimate_sop_probes(probes, rate, cfg);
}

}  // namespace fdsec
