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

#include "privsampler/mollifier.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "privsampler/errors.h"
#include "privsampler/f_divergence.h"

namespace privsampler {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr int kMaxBisectionIterations = 200;

double KahanSum(const std::vector<double>& values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

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

void CheckPair(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "supports differ: " + std::to_string(p.size()) + " vs " +
                    std::to_string(q.size()));
  }
  if (!q.IsStrictlyPositive()) {
    throw Error(ErrorCode::kZeroEntry, "reference q must be strictly positive");
  }
}

// Renormalizes to an exact unit sum so the bisection target is attainable
// at 1e-12 even when the input sums are only within the 1e-9 validation
// tolerance. A no-op for inputs that already sum to exactly 1.
std::vector<double> Renormalized(const Distribution& d) {
  std::vector<double> v = d.probs();
  const double sum = KahanSum(v);
  if (sum != 1.0) {
    for (double& x : v) x /= sum;
  }
  return v;
}

}  // namespace

bool InMollifier(const Distribution& phat, const Distribution& q,
                 double epsilon, double tol) {
  CheckEpsilon(epsilon);
  CheckPair(phat, q);
  const double bound = std::exp(epsilon / 2.0) * (1.0 + tol);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (phat[i] == 0.0) return false;  // infinite ratio
    const double ratio = std::max(q[i] / phat[i], phat[i] / q[i]);
    if (ratio > bound) return false;
  }
  return true;
}

ProjectionResult ProjectKl(const Distribution& p, const Distribution& q,
                           double epsilon) {
  CheckEpsilon(epsilon);
  CheckPair(p, q);
  const std::size_t n = q.size();
  const std::vector<double> pv = Renormalized(p);
  const std::vector<double> qv = Renormalized(q);

  const double half = std::exp(epsilon / 2.0);
  std::vector<double> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = qv[i] / half;
    hi[i] = qv[i] * half;
  }

  std::vector<double> phat(n);
  auto clipped_sum = [&](double c) {
    for (std::size_t i = 0; i < n; ++i) {
      phat[i] = std::clamp(pv[i] / c, lo[i], hi[i]);
    }
    return KahanSum(phat);
  };

  double normalizer = 1.0;
  int iterations = 0;

  if (std::abs(clipped_sum(1.0) - 1.0) > kSumTolerance) {
    double c_lo = 1e-12;
    const double c_hi = *std::max_element(pv.begin(), pv.end()) * half /
                        *std::min_element(qv.begin(), qv.end());
    if (clipped_sum(c_hi) > 1.0 + kSumTolerance) {
      throw Error(ErrorCode::kBisectionFailure,
                  "clipped sum exceeds 1 at the upper bracket");
    }
    // Supremum of the clip map as c -> 0+: supported coordinates reach
    // their ceiling, unsupported ones stay at their floor. It decides
    // whether a root exists at all, and the smallest all-ceiling c gives a
    // lower bracket that is always below the root (the default 1e-12 can
    // sit above it when supp(p) carries extremely small entries).
    double sum_limit = 0.0;
    double c_floor = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      sum_limit += pv[i] > 0.0 ? hi[i] : lo[i];
      if (pv[i] > 0.0) c_floor = std::min(c_floor, pv[i] / hi[i]);
    }
    c_floor = std::max(c_floor, std::numeric_limits<double>::denorm_min());
    if (clipped_sum(c_lo) < 1.0 - kSumTolerance) {
      if (sum_limit >= 1.0 - kSumTolerance) {
        c_lo = std::min(c_lo, c_floor);
      } else {
        // No c reaches mass 1 (possible only when p has exact zeros): the
        // ceiling over supp(p) is forced, and the KL objective is
        // indifferent on the rest, so park the deficit on unsupported
        // coordinates in index order.
        double deficit = 1.0;
        normalizer = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
          phat[i] = pv[i] > 0.0 ? hi[i] : lo[i];
          deficit -= phat[i];
          if (pv[i] > 0.0) {
            // Largest c at which coordinate i still sits at its ceiling.
            normalizer = std::min(normalizer, pv[i] / hi[i]);
          }
        }
        for (std::size_t i = 0; i < n && deficit > 0.0; ++i) {
          if (pv[i] > 0.0) continue;
          const double add = std::min(hi[i] - phat[i], deficit);
          phat[i] += add;
          deficit -= add;
          ++iterations;
        }
        if (deficit > kSumTolerance) {
          throw Error(ErrorCode::kBisectionFailure,
                      "mollifier cannot absorb the projected mass");
        }
        Distribution projected_limit(phat);
        const double achieved_limit =
            Divergence(FDivergence::KullbackLeibler(), Distribution(pv),
                       projected_limit);
        return ProjectionResult{std::move(projected_limit), normalizer,
                                achieved_limit, iterations};
      }
    }

    double c_hi_work = c_hi;
    double c = c_lo;
    double sum = clipped_sum(c);
    if (sum < 1.0 - kSumTolerance) {
      throw Error(ErrorCode::kBisectionFailure,
                  "bracket does not straddle 1");
    }
    while (iterations < kMaxBisectionIterations &&
           std::abs(sum - 1.0) > kSumTolerance) {
      c = 0.5 * (c_lo + c_hi_work);
      sum = clipped_sum(c);
      if (sum > 1.0) {
        c_lo = c;
      } else {
        c_hi_work = c;
      }
      ++iterations;
    }
    normalizer = c;
    if (std::abs(KahanSum(phat) - 1.0) > 1e-9) {
      throw Error(ErrorCode::kBisectionFailure, "bisection did not converge");
    }
  }

  Distribution projected(phat);
  const double achieved =
      Divergence(FDivergence::KullbackLeibler(), Distribution(pv), projected);
  return ProjectionResult{std::move(projected), normalizer, achieved,
                          iterations};
}

ProjectionResult ProjectTv(const Distribution& p, const Distribution& q,
                           double epsilon) {
  CheckEpsilon(epsilon);
  CheckPair(p, q);
  const std::size_t n = q.size();
  const std::vector<double> pv = Renormalized(p);
  const std::vector<double> qv = Renormalized(q);

  const double half = std::exp(epsilon / 2.0);
  std::vector<double> lo(n), hi(n), phat(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = qv[i] / half;
    hi[i] = qv[i] * half;
    phat[i] = std::clamp(pv[i], lo[i], hi[i]);
  }

  // Clipping leaves the objective at its lower bound
  // max(sum (p-hi)_+, sum (lo-p)_+); rebalancing to unit mass below keeps
  // it there. Mass moves in a fixed index order for determinism.
  double residual = 1.0 - KahanSum(phat);
  int iterations = 0;
  if (residual > 0.0) {
    // Raise entries below p first (each unit lowers the objective), then
    // spend the rest on whatever headroom is left (objective-neutral).
    for (int pass = 0; pass < 2 && residual > 0.0; ++pass) {
      for (std::size_t i = 0; i < n && residual > 0.0; ++i) {
        const double cap = pass == 0 ? std::min(hi[i], pv[i]) : hi[i];
        const double add = std::min(cap - phat[i], residual);
        if (add <= 0.0) continue;
        phat[i] += add;
        residual -= add;
        ++iterations;
      }
    }
    if (residual > kSumTolerance) {
      throw Error(ErrorCode::kInfeasible,
                  "mollifier cannot absorb the projected mass");
    }
  } else if (residual < 0.0) {
    // Trim entries above p first (objective-neutral), then cut into
    // entries at or below p (each unit raises the objective, matching the
    // lower bound sum (lo-p)_+).
    double excess = -residual;
    for (int pass = 0; pass < 2 && excess > 0.0; ++pass) {
      for (std::size_t i = 0; i < n && excess > 0.0; ++i) {
        const double floor_i = pass == 0 ? std::max(lo[i], pv[i]) : lo[i];
        const double take = std::min(phat[i] - floor_i, excess);
        if (take <= 0.0) continue;
        phat[i] -= take;
        excess -= take;
        ++iterations;
      }
    }
    if (excess > kSumTolerance) {
      throw Error(ErrorCode::kInfeasible,
                  "mollifier cannot shed the projected mass");
    }
  }

  double objective = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    objective += std::max(pv[i] - phat[i], 0.0);
  }
  return ProjectionResult{Distribution(phat), std::nullopt, objective,
                          iterations};
}

}  // namespace privsampler
