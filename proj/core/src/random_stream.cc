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

#include "privsampler/random_stream.h"

namespace privsampler {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t RandomStream::NextWord() {
  const std::uint64_t word = Mix64(seed_ + (position_ + 1) * kGolden);
  ++position_;
  return word;
}

double RandomStream::NextUniform() {
  // 53 mantissa bits; value in [0, 1).
  return static_cast<double>(NextWord() >> 11) * 0x1.0p-53;
}

double RandomStream::NextUniformOpen() {
  double u = NextUniform();
  while (u == 0.0) u = NextUniform();
  return u;
}

RandomStream RandomStream::Split(std::uint64_t index) const {
  return RandomStream(Mix64(Mix64(seed_) ^ ((index + 1) * kGolden)));
}

}  // namespace privsampler
