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

#include "privsampler/kernel.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "privsampler/errors.h"

namespace privsampler {

Kernel::Kernel(std::size_t n, std::vector<double> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n_ < 2) {
    throw Error(ErrorCode::kTooShort,
                "kernel needs dimension >= 2, got " + std::to_string(n_));
  }
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(n_ * n_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = entries_[i * n_ + j];
      if (!(v >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is " + std::to_string(v));
      }
      row_sum += v;
    }
    if (std::abs(row_sum - 1.0) > kNormalizationTolerance) {
      throw Error(ErrorCode::kNotNormalized,
                  "row " + std::to_string(i) + " sums to " +
                      std::to_string(row_sum));
    }
  }
}

std::vector<double> Kernel::Diagonal() const {
  std::vector<double> diag(n_);
  for (std::size_t i = 0; i < n_; ++i) diag[i] = entries_[i * n_ + i];
  return diag;
}

double Kernel::MinDiagonal() const {
  double m = entries_[0];
  for (std::size_t i = 1; i < n_; ++i) m = std::min(m, entries_[i * n_ + i]);
  return m;
}

Kernel Kernel::Identity(std::size_t n) {
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
  return Kernel(n, std::move(entries));
}

Distribution ApplyKernel(const Distribution& p, const Kernel& k) {
  const std::size_t n = k.size();
  if (p.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distribution size " + std::to_string(p.size()) +
                    " vs kernel size " + std::to_string(n));
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double pi = p[i];
    if (pi == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += pi * k(i, j);
  }
  double sum = 0.0;
  for (double v : out) sum += v;
  for (double& v : out) v /= sum;
  return Distribution(std::move(out));
}

LdpReport VerifyLdp(const Kernel& k, double epsilon, double tol) {
  const std::size_t n = k.size();
  double max_log_ratio = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col_min = std::numeric_limits<double>::infinity();
    double col_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      col_min = std::min(col_min, k(i, j));
      col_max = std::max(col_max, k(i, j));
    }
    if (col_max == 0.0) continue;  // column never emitted
    const double log_ratio =
        col_min == 0.0 ? std::numeric_limits<double>::infinity()
                       : std::log(col_max / col_min);
    max_log_ratio = std::max(max_log_ratio, log_ratio);
  }
  return LdpReport{max_log_ratio,
                   max_log_ratio <= epsilon * (1.0 + tol) + tol};
}

InvarianceReport VerifyInvariance(const Kernel& k, const Distribution& q,
                                  double tol) {
  const std::size_t n = k.size();
  if (q.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distribution size " + std::to_string(q.size()) +
                    " vs kernel size " + std::to_string(n));
  }
  double max_dev = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double out_j = 0.0;
    for (std::size_t i = 0; i < n; ++i) out_j += q[i] * k(i, j);
    max_dev = std::max(max_dev, std::abs(out_j - q[j]));
  }
  return InvarianceReport{max_dev, max_dev <= tol};
}

}  // namespace privsampler
