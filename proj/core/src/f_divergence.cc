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

#include "privsampler/f_divergence.h"

#include <cmath>
#include <limits>
#include <utility>

#include "privsampler/errors.h"

namespace privsampler {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

FDivergence::FDivergence(Kind kind, std::string name,
                         std::function<double(double)> f, double f_at_zero,
                         double slope_at_infinity)
    : kind_(kind),
      name_(std::move(name)),
      f_(std::move(f)),
      f_at_zero_(f_at_zero),
      slope_at_infinity_(slope_at_infinity) {}

FDivergence FDivergence::TotalVariation() {
  return FDivergence(Kind::kTotalVariation, "tv",
                     [](double t) { return 0.5 * std::abs(t - 1.0); }, 0.5,
                     0.5);
}

FDivergence FDivergence::KullbackLeibler() {
  return FDivergence(Kind::kKullbackLeibler, "kl",
                     [](double t) { return t * std::log(t); }, 0.0, kInf);
}

FDivergence FDivergence::ChiSquare() {
  return FDivergence(Kind::kChiSquare, "chi2",
                     [](double t) { return (t - 1.0) * (t - 1.0); }, 1.0,
                     kInf);
}

FDivergence FDivergence::SquaredHellinger() {
  return FDivergence(Kind::kSquaredHellinger, "hellinger2",
                     [](double t) {
                       const double d = std::sqrt(t) - 1.0;
                       return d * d;
                     },
                     1.0, 1.0);
}

FDivergence FDivergence::Custom(std::function<double(double)> f,
                                double f_at_zero) {
  if (!f) {
    throw Error(ErrorCode::kInvalidArgument, "custom generator is empty");
  }
  if (std::abs(f(1.0)) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "custom generator must satisfy f(1) = 0");
  }
  if (std::isnan(f_at_zero) || f_at_zero < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "f(0+) must be nonnegative (may be +inf)");
  }
  return FDivergence(Kind::kCustom, "custom", std::move(f), f_at_zero, kInf);
}

double FDivergence::Generator(double t) const { return f_(t); }

double Divergence(const FDivergence& f, const Distribution& p,
                  const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "supports differ: " + std::to_string(p.size()) + " vs " +
                    std::to_string(q.size()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    const double qi = q[i];
    if (qi == 0.0) {
      if (pi == 0.0) continue;  // 0 f(0/0) = 0
      const double slope = f.SlopeAtInfinity();
      if (std::isinf(slope)) return kInf;
      total += pi * slope;
    } else if (pi == 0.0) {
      const double f0 = f.AtZero();
      if (std::isinf(f0)) return kInf;
      total += qi * f0;
    } else {
      total += qi * f.Generator(pi / qi);
    }
  }
  return total;
}

}  // namespace privsampler
