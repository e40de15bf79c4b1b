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

#include "privsampler/distribution.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "privsampler/errors.h"

namespace privsampler {

Distribution::Distribution(std::vector<double> probs, bool require_positive)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw Error(ErrorCode::kTooShort,
                "distribution needs at least 2 entries, got " +
                    std::to_string(probs_.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double v = probs_[i];
    if (!(v >= 0.0)) {  // also catches NaN
      throw Error(ErrorCode::kNegativeEntry,
                  "entry " + std::to_string(i) + " is " + std::to_string(v));
    }
    if (require_positive && v == 0.0) {
      throw Error(ErrorCode::kZeroEntry,
                  "entry " + std::to_string(i) + " is zero");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::kNotNormalized,
                "entries sum to " + std::to_string(sum));
  }
}

double Distribution::MinEntry() const {
  return *std::min_element(probs_.begin(), probs_.end());
}

bool Distribution::IsStrictlyPositive() const {
  return std::all_of(probs_.begin(), probs_.end(),
                     [](double v) { return v > 0.0; });
}

Distribution Distribution::Uniform(std::size_t n) {
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                      /*require_positive=*/true);
}

Distribution Distribution::Dirac(std::size_t n, std::size_t index) {
  std::vector<double> probs(n, 0.0);
  probs.at(index) = 1.0;
  return Distribution(std::move(probs));
}

Distribution ValidateDistribution(std::vector<double> probs,
                                  bool require_positive) {
  return Distribution(std::move(probs), require_positive);
}

SortResult SortWithPermutation(const Distribution& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&q](std::size_t a, std::size_t b) { return q[a] < q[b]; });

  std::vector<double> sorted(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    sorted[pos] = q[order[pos]];
    perm[order[pos]] = pos;
  }
  return SortResult{Distribution(std::move(sorted)), std::move(perm)};
}

}  // namespace privsampler
