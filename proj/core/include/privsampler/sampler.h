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

#ifndef PRIVSAMPLER_SAMPLER_H_
#define PRIVSAMPLER_SAMPLER_H_

#include <cstddef>

#include "privsampler/distribution.h"
#include "privsampler/mechanism.h"
#include "privsampler/mollifier.h"
#include "privsampler/random_stream.h"

namespace privsampler {

// Inverse-CDF step: the smallest index j with u < sum_{i<=j} dist(i), so a
// u exactly on a boundary resolves to the higher index. u must be in [0, 1).
std::size_t IndexFromUniform(const Distribution& dist, double u);

// Draws one index by inverse CDF over cumulative sums in natural index
// order, consuming exactly one uniform variate.
std::size_t SampleIndex(const Distribution& dist, RandomStream& rng);

// Private sample through the optimal mechanism: one draw from p * K. The
// output law across any two inputs satisfies the e^eps ratio bound of the
// bundle.
std::size_t PrivateSampleOptimal(const Distribution& p,
                                 const MechanismBundle& bundle,
                                 RandomStream& rng);

enum class ProjectionDivergence { kKl, kTv };

// Private sample through the mollifier baseline: one draw from the KL or
// TV projection of p onto the relative epsilon-mollifier around q.
std::size_t PrivateSampleMollifier(const Distribution& p,
                                   const Distribution& q, double epsilon,
                                   ProjectionDivergence divergence,
                                   RandomStream& rng);

}  // namespace privsampler

#endif  // PRIVSAMPLER_SAMPLER_H_
