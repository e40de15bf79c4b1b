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

#include <algorithm>
#include <cmath>
#include <vector>

#include "privsampler/errors.h"
#include "privsampler/f_divergence.h"
#include "privsampler/harness.h"
#include "privsampler/kernel.h"
#include "privsampler/mechanism.h"
#include "privsampler/mollifier.h"

namespace privsampler {

namespace {

Distribution EmpiricalDistribution(const UserHistogram& user) {
  double total = 0.0;
  for (std::uint64_t c : user.counts) total += static_cast<double>(c);
  std::vector<double> probs(user.counts.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = static_cast<double>(user.counts[i]) / total;
  }
  return Distribution(std::move(probs));
}

}  // namespace

void RecomputeAggregates(BenchReport& report) {
  const std::size_t n = report.per_user.size();
  report.runs = static_cast<int>(n);
  if (n == 0) {
    report.max_tv = report.mean_tv = report.mean_kl = 0.0;
    report.stderr_tv = report.stderr_kl = 0.0;
    return;
  }
  double max_tv = 0.0, sum_tv = 0.0, sum_kl = 0.0;
  for (const UserDistance& u : report.per_user) {
    max_tv = std::max(max_tv, u.tv);
    sum_tv += u.tv;
    sum_kl += u.kl;
  }
  report.max_tv = max_tv;
  report.mean_tv = sum_tv / static_cast<double>(n);
  report.mean_kl = sum_kl / static_cast<double>(n);
  if (n < 2) {
    report.stderr_tv = report.stderr_kl = 0.0;
    return;
  }
  double var_tv = 0.0, var_kl = 0.0;
  for (const UserDistance& u : report.per_user) {
    var_tv += (u.tv - report.mean_tv) * (u.tv - report.mean_tv);
    var_kl += (u.kl - report.mean_kl) * (u.kl - report.mean_kl);
  }
  const double denom = static_cast<double>(n - 1);
  report.stderr_tv =
      std::sqrt(var_tv / denom) / std::sqrt(static_cast<double>(n));
  report.stderr_kl =
      std::sqrt(var_kl / denom) / std::sqrt(static_cast<double>(n));
}

std::vector<BenchReport> DatasetBenchmark(
    const std::vector<GroupDataset>& groups, double epsilon,
    const std::vector<Method>& methods) {
  if (groups.empty()) {
    throw Error(ErrorCode::kEmptyAfterFiltering, "no groups to benchmark");
  }
  const FDivergence tv = FDivergence::TotalVariation();
  const FDivergence kl = FDivergence::KullbackLeibler();

  std::vector<BenchReport> reports;
  for (const GroupDataset& group : groups) {
    for (Method method : methods) {
      BenchReport report;
      report.group_id = group.group_id;
      report.method = method;
      report.epsilon = epsilon;

      // The optimal mechanism depends only on the group prior; build once.
      std::optional<MechanismBundle> bundle;
      if (method == Method::kOptimal) {
        bundle = BuildOptimal(group.prior, epsilon);
      }

      for (const UserHistogram& user : group.users) {
        const Distribution p = EmpiricalDistribution(user);
        Distribution sampling =
            method == Method::kOptimal
                ? ApplyKernel(p, bundle->kernel)
                : (method == Method::kMollifierKl
                       ? ProjectKl(p, group.prior, epsilon).projected
                       : ProjectTv(p, group.prior, epsilon).projected);
        report.per_user.push_back(UserDistance{
            user.user_id, Divergence(tv, p, sampling),
            Divergence(kl, p, sampling)});
      }
      std::sort(report.per_user.begin(), report.per_user.end(),
                [](const UserDistance& a, const UserDistance& b) {
                  return a.user_id < b.user_id;
                });
      RecomputeAggregates(report);
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace privsampler
