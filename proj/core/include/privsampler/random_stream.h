// Copyright 2026 The privsampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVSAMPLER_RANDOM_STREAM_H_
#define PRIVSAMPLER_RANDOM_STREAM_H_

#include <cstdint>

namespace privsampler {

// Deterministic counter-based uniform stream (SplitMix64). The variate at
// (seed, position) is
//
//   word     = Mix64(seed + (position + 1) * 0x9E3779B97F4A7C15)
//   uniform  = (word >> 11) * 2^-53          in [0, 1)
//
// where Mix64 is the SplitMix64 finalizer. Identical (seed, position) pairs
// produce identical variates on every platform. Single-owner: concurrent
// use requires independent streams from Split().
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t position = 0)
      : seed_(seed), position_(position) {}

  // Consumes one variate; advances position by exactly 1.
  double NextUniform();

  // Raw 64-bit word for the current position; advances position by 1.
  std::uint64_t NextWord();

  // Uniform in (0, 1): re-draws the (measure-zero) exact 0.0.
  double NextUniformOpen();

  // Independent child stream: seed = Mix64(Mix64(seed) ^ ((index + 1) *
  // 0x9E3779B97F4A7C15)), position 0. The parent is not advanced.
  RandomStream Split(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

 private:
  std::uint64_t seed_;
  std::uint64_t position_;
};

}  // namespace privsampler

#endif  // PRIVSAMPLER_RANDOM_STREAM_H_
