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

#ifndef PRIVSAMPLER_DISTRIBUTION_H_
#define PRIVSAMPLER_DISTRIBUTION_H_

#include <cstddef>
#include <vector>

namespace privsampler {

// Absolute tolerance on |sum - 1| accepted by Distribution validation.
inline constexpr double kNormalizationTolerance = 1e-9;

// A finite probability vector over n >= 2 symbols. Immutable after
// construction; construction validates entries >= 0 and sum within
// kNormalizationTolerance of 1. With require_positive, zero entries are
// rejected (public priors must have full support).
class Distribution {
 public:
  Distribution(std::vector<double> probs, bool require_positive = false);

  std::size_t size() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  double MinEntry() const;
  bool IsStrictlyPositive() const;

  // Uniform distribution over n symbols.
  static Distribution Uniform(std::size_t n);
  // Point mass at symbol `index` (0-based).
  static Distribution Dirac(std::size_t n, std::size_t index);

 private:
  std::vector<double> probs_;
};

// Validates a raw vector into a Distribution. Throws Error with code
// NotNormalized, NegativeEntry, ZeroEntry (require_positive only), or
// TooShort (n < 2).
Distribution ValidateDistribution(std::vector<double> probs,
                                  bool require_positive = false);

struct SortResult {
  Distribution sorted;            // entries in non-decreasing order
  std::vector<std::size_t> perm;  // perm[i] = position of original index i
};

// Stable sort into non-decreasing order. Ties keep their original relative
// order, so the result is deterministic. sorted[perm[i]] == q[i].
SortResult SortWithPermutation(const Distribution& q);

}  // namespace privsampler

#endif  // PRIVSAMPLER_DISTRIBUTION_H_
