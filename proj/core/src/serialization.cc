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

#include "privsampler/serialization.h"

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "privsampler/errors.h"

namespace privsampler {

namespace {

using nlohmann::json;

json ParseJson(const std::string& text) {
  json parsed = json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    throw Error(ErrorCode::kInvalidArgument, "malformed JSON");
  }
  return parsed;
}

}  // namespace

std::string BundleToJson(const MechanismBundle& bundle) {
  const std::size_t n = bundle.kernel.size();
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(bundle.kernel(i, j));
    rows.push_back(std::move(row));
  }
  json out{{"n", n},
           {"epsilon", bundle.epsilon},
           {"prior", bundle.prior.probs()},
           {"kernel", std::move(rows)}};
  return out.dump(2) + "\n";
}

MechanismBundle BundleFromJson(const std::string& text) {
  const json parsed = ParseJson(text);
  if (!parsed.is_object() || !parsed.contains("n") ||
      !parsed.contains("epsilon") || !parsed.contains("prior") ||
      !parsed.contains("kernel")) {
    throw Error(ErrorCode::kInvalidArgument,
                "mechanism JSON needs n, epsilon, prior, kernel");
  }
  std::size_t n = 0;
  double epsilon = 0.0;
  std::vector<double> prior;
  std::vector<double> entries;
  try {
    n = parsed.at("n").get<std::size_t>();
    epsilon = parsed.at("epsilon").get<double>();
    prior = parsed.at("prior").get<std::vector<double>>();
    if (prior.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prior length does not match n");
    }
    const json& rows = parsed.at("kernel");
    if (!rows.is_array() || rows.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "kernel must have n rows");
    }
    entries.reserve(n * n);
    for (const json& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "kernel rows must have n entries");
      }
      for (const json& v : row) entries.push_back(v.get<double>());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("mechanism JSON: ") + e.what());
  }

  Distribution q(std::move(prior), /*require_positive=*/false);
  Kernel kernel(n, std::move(entries));

  // Reconstruct the sorted view; conjugation by the sort permutation is
  // exact, so the result round-trips bit-for-bit.
  SortResult sorted = SortWithPermutation(q);
  std::vector<double> sorted_entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sorted_entries[sorted.perm[i] * n + sorted.perm[j]] = kernel(i, j);
    }
  }
  Kernel sorted_kernel(n, std::move(sorted_entries));
  return MechanismBundle{std::move(kernel), std::move(sorted_kernel),
                         std::move(sorted.perm), std::move(q), epsilon};
}

std::string ProjectionResultToJson(const ProjectionResult& result) {
  json out{{"projected", result.projected.probs()},
           {"achievedDivergence", result.achieved_divergence},
           {"iterations", result.iterations}};
  if (result.normalizer.has_value()) {
    out["normalizer"] = *result.normalizer;
  } else {
    out["normalizer"] = nullptr;
  }
  return out.dump(2) + "\n";
}

}  // namespace privsampler
