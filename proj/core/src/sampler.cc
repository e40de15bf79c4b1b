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

#include "privsampler/sampler.h"

#include <string>

#include "privsampler/errors.h"
#include "privsampler/kernel.h"

namespace privsampler {

std::size_t IndexFromUniform(const Distribution& dist, double u) {
  double cumulative = 0.0;
  const std::size_t n = dist.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    cumulative += dist[j];
    // u exactly on a boundary resolves to the higher index.
    if (u < cumulative) return j;
  }
  return n - 1;
}

std::size_t SampleIndex(const Distribution& dist, RandomStream& rng) {
  return IndexFromUniform(dist, rng.NextUniform());
}

std::size_t PrivateSampleOptimal(const Distribution& p,
                                 const MechanismBundle& bundle,
                                 RandomStream& rng) {
  if (p.size() != bundle.kernel.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distribution size " + std::to_string(p.size()) +
                    " vs mechanism size " +
                    std::to_string(bundle.kernel.size()));
  }
  // Sampling from the analytic output law pK is equivalent to randomizing
  // a draw from p through K.
  return SampleIndex(ApplyKernel(p, bundle.kernel), rng);
}

std::size_t PrivateSampleMollifier(const Distribution& p,
                                   const Distribution& q, double epsilon,
                                   ProjectionDivergence divergence,
                                   RandomStream& rng) {
  const ProjectionResult result = divergence == ProjectionDivergence::kKl
                                      ? ProjectKl(p, q, epsilon)
                                      : ProjectTv(p, q, epsilon);
  return SampleIndex(result.projected, rng);
}

}  // namespace privsampler
