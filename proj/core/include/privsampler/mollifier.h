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

#ifndef PRIVSAMPLER_MOLLIFIER_H_
#define PRIVSAMPLER_MOLLIFIER_H_

#include <optional>

#include "privsampler/distribution.h"

namespace privsampler {

// Result of projecting p onto the relative epsilon-mollifier around q,
// the set of distributions within a pointwise e^{eps/2} ratio of q.
struct ProjectionResult {
  Distribution projected;            // p-hat, strictly positive
  std::optional<double> normalizer;  // the constant C; KL projection only
  double achieved_divergence;        // KL(p||p-hat) or the TV objective
  int iterations;                    // bisection / adjustment steps
};

// True iff max_x max(q(x)/phat(x), phat(x)/q(x)) <= e^{eps/2} * (1 + tol).
// Throws DimensionMismatch, or ZeroEntry when q has a zero.
bool InMollifier(const Distribution& phat, const Distribution& q,
                 double epsilon, double tol);

// Information projection: the KL(p||.)-minimizer over the mollifier,
//   phat(x) = min(max(q(x) e^{-eps/2}, p(x)/C), q(x) e^{eps/2}),
// with C > 0 found by bisection so that phat sums to 1 within 1e-12 (at
// most 200 iterations). The map C -> sum of clipped entries is
// non-increasing and the bracket [1e-12, max_x p(x) e^{eps/2} / min_x q(x)]
// straddles 1 for every valid input; a bracket violation throws
// BisectionFailure (an internal invariant breach, not user error).
ProjectionResult ProjectKl(const Distribution& p, const Distribution& q,
                           double epsilon);

// TV projection: minimizes sum_i (p_i - phat_i)_+ over the mollifier,
// which equals TV(p, phat) since both sides sum to 1. Runs a direct greedy:
// clip p into [q e^{-eps/2}, q e^{eps/2}], then move the surplus or deficit
// of mass in a fixed index order, touching only coordinates whose change
// leaves the objective at its lower bound max(clipped-off mass, added
// mass). The minimizer can be non-unique; only the objective value is
// contractual.
ProjectionResult ProjectTv(const Distribution& p, const Distribution& q,
                           double epsilon);

}  // namespace privsampler

#endif  // PRIVSAMPLER_MOLLIFIER_H_
