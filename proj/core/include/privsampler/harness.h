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

#ifndef PRIVSAMPLER_HARNESS_H_
#define PRIVSAMPLER_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "privsampler/distribution.h"
#include "privsampler/random_stream.h"

namespace privsampler {

// One user's event counts over the group's shared category list.
struct UserHistogram {
  std::string user_id;
  std::string group_id;
  std::vector<std::uint64_t> counts;
};

// A filtered group with its derived public prior: the arithmetic mean of
// the users' normalized count vectors, renormalized, and add-lambda
// smoothed (lambda = 1e-6 per entry) only when a category would otherwise
// have zero mass. Users are sorted by user_id, groups by group_id.
struct GroupDataset {
  std::string group_id;
  std::vector<std::string> categories;
  std::vector<UserHistogram> users;
  Distribution prior;
};

struct IngestFilters {
  std::uint64_t min_events = 20;   // minimum events on retained categories
  std::size_t top_k = 100;         // categories kept per group, by count
  std::size_t min_group_size = 1000;  // minimum surviving users per group
};

// Reads the long-format CSV `user_id,group_id,category,count` (header
// required, unknown columns rejected) and applies, per group: keep top_k
// categories by total count, then drop users under min_events, then drop
// groups under min_group_size. Throws MalformedRow (with line number),
// InconsistentCategories (duplicate user/category rows), or
// EmptyAfterFiltering when nothing survives.
std::vector<GroupDataset> IngestCounts(const std::string& path,
                                       const IngestFilters& filters);
std::vector<GroupDataset> IngestCounts(std::istream& in,
                                       const IngestFilters& filters);

enum class Method { kOptimal, kMollifierKl, kMollifierTv };

const char* MethodName(Method m);
Method MethodFromName(const std::string& name);

struct UserDistance {
  std::string user_id;
  double tv;
  double kl;
};

// Per-group, per-method distances between each user's empirical
// distribution and the method's sampling distribution. Aggregates are
// recomputed from per_user rows; runs counts the per-user evaluations and
// the stderr fields are sample-std / sqrt(runs).
struct BenchReport {
  std::string group_id;
  Method method;
  double epsilon;
  std::vector<UserDistance> per_user;
  double max_tv;
  double mean_tv;
  double mean_kl;
  double stderr_tv;
  double stderr_kl;
  int runs;
};

// Recomputes max/mean/stderr fields of `report` from its per_user rows.
void RecomputeAggregates(BenchReport& report);

// Runs every requested method on every group. The optimal mechanism is
// built once per group from its prior; mollifier methods project each
// user's distribution individually.
std::vector<BenchReport> DatasetBenchmark(
    const std::vector<GroupDataset>& groups, double epsilon,
    const std::vector<Method>& methods);

// Mean and standard error across sweep runs.
struct SweepStats {
  double tv_mean;
  double tv_stderr;
  double kl_mean;
  double kl_stderr;
};

struct SweepPoint {
  double p1;
  SweepStats optimal;
  SweepStats mollifier_kl;
  SweepStats mollifier_tv;
};

struct SweepReport {
  std::size_t n;
  double epsilon;
  int runs;
  std::vector<SweepPoint> points;
};

// Synthetic protocol: per run, draw a prior q by normalizing n uniform
// variates; for each grid value p1 in [1/n, 1], form
// p = (p1, (1-p1)/(n-1), ...) and record TV and KL between p and (a) the
// optimal mechanism's output p*K, (b) the KL projection, (c) the TV
// projection. Deterministic given the stream's seed. Throws GridOutOfRange
// for grid values outside [1/n, 1].
SweepReport SyntheticSweep(std::size_t n, double epsilon, int runs,
                           const std::vector<double>& p1_grid,
                           RandomStream& rng);

enum class ReportFormat { kJson, kCsv };

// Serializes reports with round-trip fidelity (shortest decimal form that
// parses back to the same double). CSV columns are
// `group_id,method,epsilon,user_id,tv,kl` with one row per user plus an
// aggregate row per report using user_id "__aggregate__" carrying
// (max_tv, mean_kl). Writes are atomic (temp file + rename).
void WriteReports(const std::vector<BenchReport>& reports,
                  const std::string& path, ReportFormat format);

// Parses reports written by WriteReports. CSV carries only per-user rows
// plus the aggregate line; the remaining aggregates are recomputed, which
// is exact because aggregates are a pure function of the per-user rows.
std::vector<BenchReport> ReadReports(const std::string& path,
                                     ReportFormat format);

// Sweep serialization; CSV columns are
// `p1,method,tv_mean,tv_stderr,kl_mean,kl_stderr`.
void WriteSweepReport(const SweepReport& report, const std::string& path,
                      ReportFormat format);

std::string SweepReportToCsv(const SweepReport& report);
std::string SweepReportToJson(const SweepReport& report);

}  // namespace privsampler

#endif  // PRIVSAMPLER_HARNESS_H_
