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

#ifndef PRIVSAMPLER_KERNEL_H_
#define PRIVSAMPLER_KERNEL_H_

#include <cstddef>
#include <vector>

#include "privsampler/distribution.h"

namespace privsampler {

// A row-stochastic n x n Markov kernel. entry(i, j) is the probability of
// emitting output j on input i. Construction validates entries >= 0 and row
// sums within kNormalizationTolerance of 1. Immutable after construction.
class Kernel {
 public:
  Kernel(std::size_t n, std::vector<double> row_major);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  const std::vector<double>& entries() const { return entries_; }

  std::vector<double> Diagonal() const;
  double MinDiagonal() const;

  static Kernel Identity(std::size_t n);

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

// Output distribution pK, (pK)_j = sum_i p_i K_ij. The result is
// renormalized by its own sum, which only absorbs rounding at the 1e-12
// scale for valid inputs.
Distribution ApplyKernel(const Distribution& p, const Kernel& k);

struct LdpReport {
  double max_log_ratio;  // max over columns j of ln(max_i K_ij / min_i K_ij)
  bool pass;             // max_log_ratio <= epsilon * (1 + tol) + tol
};

// Checks the epsilon-LDP ratio bound. The sup over input distribution pairs
// reduces to per-column extreme ratios since pK(j) is a convex combination
// of column j. A column mixing a zero with a positive entry gives +inf;
// an all-zero column is skipped.
LdpReport VerifyLdp(const Kernel& k, double epsilon, double tol);

struct InvarianceReport {
  double max_abs_deviation;  // max_j |(qK)_j - q_j|
  bool pass;                 // max_abs_deviation <= tol
};

// Checks stationarity qK = q.
InvarianceReport VerifyInvariance(const Kernel& k, const Distribution& q,
                                  double tol);

}  // namespace privsampler

#endif  // PRIVSAMPLER_KERNEL_H_
