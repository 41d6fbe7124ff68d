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

#include <array>
#include <cstdint>

namespace fdsec {

/// Counter-based uniform stream keyed by (seed, substream).
///
/// Backed by Philox4x32-10 (Salmon et al., SC'11). The seed is the 64-bit
/// key; the substream index occupies the upper half of the 128-bit counter
/// and the block position the lower half, so two streams with different
/// substream indices never share a counter value. Each Philox block yields
/// 128 bits, consumed as two 64-bit words.
///
/// A stream is a small value type: copying it snapshots its position. It is
/// single-owner and must not be shared across threads.
class RandomStream {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  RandomStream(std::uint64_t seed, std::uint64_t substream) noexcept;

  /// Next uniform in the open interval (0, 1), 52-bit resolution.
  double next_uniform() noexcept;

  std::uint64_t next_u64() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t substream() const noexcept { return substream_; }

  /// Number of 64-bit words consumed so far.
  std::uint64_t position() const noexcept { return position_; }

  /// Raw Philox4x32-10 bijection, exposed for known-answer tests.
  static Counter philox4x32_10(Counter counter, Key key) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t substream_;
  std::uint64_t position_ = 0;
  Counter block_{};
};

}  // namespace fdsec
