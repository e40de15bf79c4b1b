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
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "privsampler/errors.h"
#include "privsampler/harness.h"

namespace privsampler {

namespace {

constexpr double kPriorSmoothing = 1e-6;

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string StripCr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

Error RowError(std::size_t line_number, const std::string& what) {
  return Error(ErrorCode::kMalformedRow,
               "line " + std::to_string(line_number) + ": " + what);
}

struct RawRow {
  std::string user_id;
  std::string category;
  std::uint64_t count;
};

// Derives the group prior: mean of the users' normalized count vectors,
// add-lambda smoothed only if some category would otherwise get zero mass.
Distribution GroupPrior(const std::vector<UserHistogram>& users,
                        std::size_t n_categories) {
  std::vector<double> mean(n_categories, 0.0);
  for (const UserHistogram& user : users) {
    double total = 0.0;
    for (std::uint64_t c : user.counts) total += static_cast<double>(c);
    for (std::size_t i = 0; i < n_categories; ++i) {
      mean[i] += static_cast<double>(user.counts[i]) / total;
    }
  }
  const double n_users = static_cast<double>(users.size());
  for (double& v : mean) v /= n_users;

  const bool has_zero =
      std::any_of(mean.begin(), mean.end(), [](double v) { return v == 0.0; });
  if (has_zero) {
    for (double& v : mean) v += kPriorSmoothing;
  }
  double sum = 0.0;
  for (double v : mean) sum += v;
  for (double& v : mean) v /= sum;
  return Distribution(std::move(mean), /*require_positive=*/true);
}

}  // namespace

std::vector<GroupDataset> IngestCounts(std::istream& in,
                                       const IngestFilters& filters) {
  std::string line;
  std::size_t line_number = 0;

  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kMalformedRow, "empty input, header required");
  }
  ++line_number;
  if (StripCr(line) != "user_id,group_id,category,count") {
    throw RowError(line_number,
                   "header must be exactly 'user_id,group_id,category,count'");
  }

  // group -> user -> category -> count
  std::map<std::string, std::map<std::string, std::map<std::string,
                                                       std::uint64_t>>>
      raw;
  while (std::getline(in, line)) {
    ++line_number;
    line = StripCr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != 4) {
      throw RowError(line_number, "expected 4 fields, got " +
                                      std::to_string(fields.size()));
    }
    const std::string& user = fields[0];
    const std::string& group = fields[1];
    const std::string& category = fields[2];
    if (user.empty() || group.empty() || category.empty()) {
      throw RowError(line_number, "empty identifier field");
    }
    std::uint64_t count = 0;
    const char* first = fields[3].data();
    const char* last = first + fields[3].size();
    const auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc() || ptr != last) {
      throw RowError(line_number,
                     "count must be a nonnegative integer, got '" +
                         fields[3] + "'");
    }
    auto [it, inserted] = raw[group][user].emplace(category, count);
    if (!inserted) {
      throw Error(ErrorCode::kInconsistentCategories,
                  "line " + std::to_string(line_number) + ": duplicate row for user '" +
                      user + "', category '" + category + "'");
    }
  }

  std::vector<GroupDataset> groups;
  for (auto& [group_id, users] : raw) {
    // Top-k categories by total count within the group; ties break
    // lexicographically for determinism.
    std::map<std::string, std::uint64_t> totals;
    for (const auto& [user_id, counts] : users) {
      for (const auto& [category, count] : counts) totals[category] += count;
    }
    std::vector<std::pair<std::string, std::uint64_t>> ranked(totals.begin(),
                                                              totals.end());
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
    if (ranked.size() > filters.top_k) ranked.resize(filters.top_k);
    std::vector<std::string> categories;
    categories.reserve(ranked.size());
    for (const auto& [category, total] : ranked) categories.push_back(category);
    std::sort(categories.begin(), categories.end());
    if (categories.size() < 2) continue;  // a prior needs >= 2 categories

    // Users filtered by events on the retained categories only.
    std::vector<UserHistogram> kept;
    for (const auto& [user_id, counts] : users) {
      UserHistogram hist{user_id, group_id,
                         std::vector<std::uint64_t>(categories.size(), 0)};
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < categories.size(); ++i) {
        const auto it = counts.find(categories[i]);
        if (it != counts.end()) {
          hist.counts[i] = it->second;
          total += it->second;
        }
      }
      if (total >= filters.min_events && total > 0) {
        kept.push_back(std::move(hist));
      }
    }
    if (kept.size() < filters.min_group_size || kept.empty()) continue;

    Distribution prior = GroupPrior(kept, categories.size());
    groups.push_back(GroupDataset{group_id, std::move(categories),
                                  std::move(kept), std::move(prior)});
  }

  if (groups.empty()) {
    throw Error(ErrorCode::kEmptyAfterFiltering,
                "no group survived the filters");
  }
  return groups;
}

std::vector<GroupDataset> IngestCounts(const std::string& path,
                                       const IngestFilters& filters) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path);
  }
  return IngestCounts(in, filters);
}

const char* MethodName(Method m) {
  switch (m) {
    case Method::kOptimal:
      return "optimal";
    case Method::kMollifierKl:
      return "mollifier-kl";
    case Method::kMollifierTv:
      return "mollifier-tv";
  }
  return "unknown";
}

Method MethodFromName(const std::string& name) {
  if (name == "optimal") return Method::kOptimal;
  if (name == "mollifier-kl") return Method::kMollifierKl;
  if (name == "mollifier-tv") return Method::kMollifierTv;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + name + "'");
}

}  // namespace privsampler
