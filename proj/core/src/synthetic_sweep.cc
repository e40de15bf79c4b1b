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

#include <cmath>
#include <string>
#include <vector>

#include "privsampler/errors.h"
#include "privsampler/f_divergence.h"
#include "privsampler/harness.h"
#include "privsampler/kernel.h"
#include "privsampler/mechanism.h"
#include "privsampler/mollifier.h"

namespace privsampler {

namespace {

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  void Add(double v) {
    sum += v;
    sum_sq += v * v;
  }
  double Mean(int runs) const { return sum / runs; }
  double Stderr(int runs) const {
    if (runs < 2) return 0.0;
    const double mean = Mean(runs);
    double var = (sum_sq - runs * mean * mean) / (runs - 1);
    if (var < 0.0) var = 0.0;  // rounding
    return std::sqrt(var) / std::sqrt(static_cast<double>(runs));
  }
};

struct PairAccumulator {
  Accumulator tv;
  Accumulator kl;
  SweepStats Stats(int runs) const {
    return SweepStats{tv.Mean(runs), tv.Stderr(runs), kl.Mean(runs),
                      kl.Stderr(runs)};
  }
};

}  // namespace

SweepReport SyntheticSweep(std::size_t n, double epsilon, int runs,
                           const std::vector<double>& p1_grid,
                           RandomStream& rng) {
  if (n < 2) {
    throw Error(ErrorCode::kTooShort, "sweep needs n >= 2");
  }
  if (runs < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sweep needs runs >= 1");
  }
  const double floor_p1 = 1.0 / static_cast<double>(n);
  for (double p1 : p1_grid) {
    if (p1 < floor_p1 - 1e-12 || p1 > 1.0 + 1e-12) {
      throw Error(ErrorCode::kGridOutOfRange,
                  "grid value " + std::to_string(p1) +
                      " outside [1/n, 1] for n = " + std::to_string(n));
    }
  }

  const FDivergence tv = FDivergence::TotalVariation();
  const FDivergence kl = FDivergence::KullbackLeibler();

  std::vector<PairAccumulator> acc_optimal(p1_grid.size());
  std::vector<PairAccumulator> acc_kl(p1_grid.size());
  std::vector<PairAccumulator> acc_tv(p1_grid.size());

  for (int run = 0; run < runs; ++run) {
    // Prior: n uniform variates, normalized. Zero draws are re-drawn so the
    // prior stays strictly positive.
    std::vector<double> raw(n);
    double sum = 0.0;
    for (double& v : raw) {
      v = rng.NextUniformOpen();
      sum += v;
    }
    for (double& v : raw) v /= sum;
    const Distribution q(raw, /*require_positive=*/true);
    const MechanismBundle bundle = BuildOptimal(q, epsilon);

    for (std::size_t g = 0; g < p1_grid.size(); ++g) {
      const double p1 = std::min(p1_grid[g], 1.0);
      std::vector<double> pv(n, (1.0 - p1) / static_cast<double>(n - 1));
      pv[0] = p1;
      const Distribution p(pv);

      const Distribution via_optimal = ApplyKernel(p, bundle.kernel);
      const Distribution via_kl = ProjectKl(p, q, epsilon).projected;
      const Distribution via_tv = ProjectTv(p, q, epsilon).projected;

      acc_optimal[g].tv.Add(Divergence(tv, p, via_optimal));
      acc_optimal[g].kl.Add(Divergence(kl, p, via_optimal));
      acc_kl[g].tv.Add(Divergence(tv, p, via_kl));
      acc_kl[g].kl.Add(Divergence(kl, p, via_kl));
      acc_tv[g].tv.Add(Divergence(tv, p, via_tv));
      acc_tv[g].kl.Add(Divergence(kl, p, via_tv));
    }
  }

  SweepReport report{n, epsilon, runs, {}};
  report.points.reserve(p1_grid.size());
  for (std::size_t g = 0; g < p1_grid.size(); ++g) {
    report.points.push_back(SweepPoint{p1_grid[g], acc_optimal[g].Stats(runs),
                                       acc_kl[g].Stats(runs),
                                       acc_tv[g].Stats(runs)});
  }
  return report;
}

}  // namespace privsampler
