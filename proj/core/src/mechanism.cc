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

#include "privsampler/mechanism.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "privsampler/errors.h"

namespace privsampler {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckEpsilon(double epsilon) {
  if (std::isnan(epsilon) || std::isinf(epsilon)) {
    throw Error(ErrorCode::kNonFiniteEpsilon,
                "epsilon must be finite, got " + std::to_string(epsilon));
  }
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon,
                "epsilon must be nonnegative, got " + std::to_string(epsilon));
  }
}

}  // namespace

Kernel BinaryOptimal(double alpha, double epsilon) {
  CheckEpsilon(epsilon);
  if (!(alpha > 0.0) || alpha > 0.5) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "alpha must lie in (0, 1/2], got " + std::to_string(alpha));
  }
  const double e = std::exp(epsilon);
  const double d = e * alpha + 1.0 - alpha;
  return Kernel(2, {e * alpha / d, (1.0 - alpha) / d, alpha / d,
                    ((e - 1.0) * alpha + 1.0 - alpha) / d});
}

Kernel RandomizedResponse(std::size_t n, double epsilon) {
  CheckEpsilon(epsilon);
  if (n < 2) {
    throw Error(ErrorCode::kTooShort,
                "randomized response needs n >= 2, got " + std::to_string(n));
  }
  const double e = std::exp(epsilon);
  const double denom = e + static_cast<double>(n) - 1.0;
  std::vector<double> entries(n * n, 1.0 / denom);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = e / denom;
  return Kernel(n, std::move(entries));
}

MechanismBundle BuildOptimal(const Distribution& q, double epsilon) {
  CheckEpsilon(epsilon);
  if (!q.IsStrictlyPositive()) {
    throw Error(ErrorCode::kZeroEntry, "prior must be strictly positive");
  }
  const std::size_t n = q.size();
  const double e = std::exp(epsilon);

  SortResult sorted = SortWithPermutation(q);
  const Distribution& s = sorted.sorted;

  // suffix[k] = sum of the sorted tail s[k..n); accumulated backwards.
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] + s[k];

  // Level k of the recursion operates on the renormalized tail s[k..n)/S_k
  // and rescales its trailing block by m_k. Carrying the cumulative product
  // of the m's lets every entry be written once; the unnormalized level
  // denominator is e^eps s_k + S_{k+1} = d_k * S_k. Below the diagonal,
  // column k is constant, so the matrix can be filled row by row.
  std::vector<double> level_scale(n, 1.0);
  std::vector<double> level_denom(n, 1.0);
  std::vector<double> below(n, 0.0);
  double scale = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double qk = s[k];
    const double denom = e * qk + suffix[k + 1];
    level_scale[k] = scale;
    level_denom[k] = denom;
    below[k] = scale * qk / denom;
    scale *= (denom - qk) / denom;
  }

  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = entries.data() + i * n;
    for (std::size_t k = 0; k < i; ++k) row[k] = below[k];
    if (i + 1 < n) {
      row[i] = level_scale[i] * e * s[i] / level_denom[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        row[j] = level_scale[i] * s[j] / level_denom[i];
      }
    } else {
      row[i] = scale;
    }
  }

  Kernel sorted_kernel(n, std::move(entries));

  const std::vector<std::size_t>& perm = sorted.perm;
  std::vector<double> original(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      original[i * n + j] = sorted_kernel(perm[i], perm[j]);
    }
  }
  Kernel kernel(n, std::move(original));

  return MechanismBundle{std::move(kernel), std::move(sorted_kernel),
                         sorted.perm, q, epsilon};
}

double OptimalUtility(double q_min, double epsilon, const FDivergence& f) {
  CheckEpsilon(epsilon);
  if (!(q_min > 0.0) || q_min > 1.0) {
    throw Error(ErrorCode::kQminOutOfRange,
                "q_min must lie in (0, 1], got " + std::to_string(q_min));
  }
  const double e = std::exp(epsilon);
  if (std::isinf(e)) {
    // Degenerate overflow regime: the f(0) weight underflows to 0 unless
    // f(0) itself is infinite.
    return (q_min < 1.0 && std::isinf(f.AtZero())) ? kInf : 0.0;
  }
  const double d = e * q_min + 1.0 - q_min;
  const double zero_weight = (1.0 - q_min) / d;
  if (zero_weight > 0.0 && std::isinf(f.AtZero())) return kInf;
  const double diag = e * q_min / d;
  double value = diag * f.Generator(1.0 / diag);
  if (zero_weight > 0.0) value += zero_weight * f.AtZero();
  return value;
}

double WorstCaseDivergence(const Kernel& k, const FDivergence& f) {
  const double k_min = k.MinDiagonal();
  if (k_min == 0.0) {
    // lim_{x->0} x f(1/x) is the slope of f at infinity.
    if (std::isinf(f.AtZero()) || std::isinf(f.SlopeAtInfinity())) return kInf;
    return f.AtZero() + f.SlopeAtInfinity();
  }
  const double miss = 1.0 - k_min;
  if (miss > 0.0 && std::isinf(f.AtZero())) return kInf;
  double value = k_min * f.Generator(1.0 / k_min);
  if (miss > 0.0) value += miss * f.AtZero();
  return value;
}

std::vector<double> DiagonalUpperBound(const Distribution& q,
                                       double epsilon) {
  CheckEpsilon(epsilon);
  if (!q.IsStrictlyPositive()) {
    throw Error(ErrorCode::kZeroEntry, "prior must be strictly positive");
  }
  const double e = std::exp(epsilon);
  std::vector<double> bound(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    bound[i] = e * q[i] / (e * q[i] + 1.0 - q[i]);
  }
  return bound;
}

}  // namespace privsampler
