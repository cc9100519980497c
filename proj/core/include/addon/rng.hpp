// Copyright 2026 The addon-rm Authors
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

namespace addon {

// Philox4x32-10 (Salmon et al., Random123). A pure function of a 128-bit
// counter and a 64-bit key, so any draw can be addressed directly.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(std::uint64_t key)
      : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)} {}

  Counter operator()(Counter ctr) const;

 private:
  Key key_;
};

// SplitMix64 finalizer; used to derive independent stream keys.
std::uint64_t splitmix64(std::uint64_t x);

// A named stream of uniforms addressed by (period, slot, trial). Equal seeds
// give equal draws on every platform.
class DrawStream {
 public:
  explicit DrawStream(std::uint64_t seed)
      : DrawStream(Philox4x32(splitmix64(seed)), splitmix64(seed)) {}

  // Child stream whose key depends on this stream's seed and `index`.
  DrawStream split(std::uint64_t index) const;

  // Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t period, std::uint32_t slot, std::uint32_t trial) const;

  bool bernoulli(double p, std::uint64_t period, std::uint32_t slot,
                 std::uint32_t trial) const {
    return uniform(period, slot, trial) < p;
  }

  std::uint64_t key() const { return key_; }

 private:
  DrawStream(Philox4x32 gen, std::uint64_t key) : gen_(gen), key_(key) {}
  Philox4x32 gen_;
  std::uint64_t key_ = 0;
};

}  // namespace addon
