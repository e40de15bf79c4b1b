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

#ifndef PRIVSAMPLER_MECHANISM_H_
#define PRIVSAMPLER_MECHANISM_H_

#include <cstddef>
#include <vector>

#include "privsampler/distribution.h"
#include "privsampler/f_divergence.h"
#include "privsampler/kernel.h"

namespace privsampler {

// The minimax-optimal mechanism for a public prior, in both index orders.
// `kernel` acts on the prior's original index order; `sorted_kernel` is the
// same mechanism over the non-decreasingly sorted prior, with
// kernel[i][j] == sorted_kernel[perm[i]][perm[j]]. Immutable; safe to share
// across threads.
struct MechanismBundle {
  Kernel kernel;
  Kernel sorted_kernel;
  std::vector<std::size_t> perm;  // original index -> sorted position
  Distribution prior;
  double epsilon;
};

// Closed-form optimal 2x2 mechanism for the prior (alpha, 1-alpha) with
// 0 < alpha <= 1/2:
//
//   1/(e^eps a + 1 - a) * [ e^eps a        1 - a             ]
//                         [ a              (e^eps-1)a + 1 - a ]
//
// Throws AlphaOutOfRange or NegativeEpsilon/NonFiniteEpsilon.
Kernel BinaryOptimal(double alpha, double epsilon);

// n-ary randomized response: diagonal e^eps/(e^eps+n-1), off-diagonal
// 1/(e^eps+n-1). Optimal under the uniform prior.
Kernel RandomizedResponse(std::size_t n, double epsilon);

// Constructs the minimax-optimal epsilon-LDP mechanism that keeps the
// strictly positive prior q invariant (qK = q). The construction sorts q,
// fills the sorted kernel level by level with a cumulative scale factor
// (O(n^2) total, equivalent to rescaling the trailing block at every
// recursion level), and conjugates back to the original order. The sorted
// kernel has non-decreasing diagonal with minimum
// e^eps q_min / (e^eps q_min + 1 - q_min).
//
// epsilon = 0 is supported (every row equals q); infinite epsilon is
// rejected with NonFiniteEpsilon. Throws ZeroEntry for non-positive priors
// and TooShort for n < 2.
MechanismBundle BuildOptimal(const Distribution& q, double epsilon);

// Minimax value over epsilon-LDP mechanisms with qK = q, which depends on q
// only through q_min:
//
//   (1-q_min)/D * f(0) + (e^eps q_min)/D * f(D/(e^eps q_min)),
//   D = e^eps q_min + 1 - q_min.
//
// Returns +inf when f(0) = +inf and q_min < 1. For TV this simplifies to
// (1-q_min)/D. Throws QminOutOfRange unless 0 < q_min <= 1.
double OptimalUtility(double q_min, double epsilon, const FDivergence& f);

// Worst-case divergence introduced by K over all inputs, attained at a
// Dirac input: f(0)(1 - K_min) + K_min f(1/K_min) with K_min the smallest
// diagonal entry. Equals max_i (1 - K_ii) for TV.
double WorstCaseDivergence(const Kernel& k, const FDivergence& f);

// Per-index diagonal cap e^eps q_i / (e^eps q_i + 1 - q_i) satisfied by
// every epsilon-LDP kernel with qK = q. Throws ZeroEntry for non-positive q.
std::vector<double> DiagonalUpperBound(const Distribution& q, double epsilon);

}  // namespace privsampler

#endif  // PRIVSAMPLER_MECHANISM_H_
