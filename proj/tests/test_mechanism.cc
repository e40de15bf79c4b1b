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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "privsampler/errors.h"
#include "privsampler/random_stream.h"
#include "privsampler/serialization.h"
#include "support/oracles.h"
#include "support/test_util.h"

namespace privsampler {
namespace {

using testing::ThrownCode;

const double kLn2 = std::log(2.0);

TEST_CASE("binary mechanism at alpha 1/2 equals binary randomized response") {
  const Kernel k = BinaryOptimal(0.5, kLn2);
  CHECK(k(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(k(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(k(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(k(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  const Kernel rr = RandomizedResponse(2, kLn2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(k(i, j) - rr(i, j)) <= 1e-15);
    }
  }
}

TEST_CASE("binary mechanism at epsilon 0 outputs the prior on both rows") {
  const Kernel k = BinaryOptimal(0.3, 0.0);
  CHECK(k(0, 0) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(k(0, 1) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(k(1, 0) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(k(1, 1) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("binary mechanism with a skewed prior") {
  // Denominator e^2 * 0.01 + 0.99 = 1.06389056...
  const Kernel k = BinaryOptimal(0.01, 2.0);
  CHECK(std::abs(k(0, 0) - 0.069453) <= 1e-5);
  CHECK(std::abs(k(0, 1) - 0.930547) <= 1e-5);
  CHECK(std::abs(k(1, 0) - 0.009400) <= 1e-5);
  CHECK(std::abs(k(1, 1) - 0.990600) <= 1e-5);
  // Row sums and stationarity of (alpha, 1-alpha), by direct arithmetic.
  CHECK(k(0, 0) + k(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(k(1, 0) + k(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(0.01 * k(0, 0) + 0.99 * k(1, 0) ==
        doctest::Approx(0.01).epsilon(1e-12));
  CHECK(0.01 * k(0, 1) + 0.99 * k(1, 1) ==
        doctest::Approx(0.99).epsilon(1e-12));
}

TEST_CASE("binary mechanism validates its arguments") {
  CHECK(ThrownCode([] { BinaryOptimal(0.0, 1.0); }) ==
        ErrorCode::kAlphaOutOfRange);
  CHECK(ThrownCode([] { BinaryOptimal(0.6, 1.0); }) ==
        ErrorCode::kAlphaOutOfRange);
  CHECK(ThrownCode([] { BinaryOptimal(0.3, -1.0); }) ==
        ErrorCode::kNegativeEpsilon);
  CHECK(ThrownCode([] {
          BinaryOptimal(0.3, std::numeric_limits<double>::infinity());
        }) == ErrorCode::kNonFiniteEpsilon);
}

TEST_CASE("randomized response closed form") {
  const Kernel a = RandomizedResponse(2, kLn2);
  CHECK(a(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(a(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const Kernel b = RandomizedResponse(3, 0.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(b(i, j) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
  }

  const Kernel c = RandomizedResponse(2, 2.0);
  CHECK(std::abs(c(0, 0) - 0.880797) <= 1e-6);
  CHECK(std::abs(c(0, 1) - 0.119203) <= 1e-6);

  CHECK(ThrownCode([] { RandomizedResponse(1, 1.0); }) ==
        ErrorCode::kTooShort);
  CHECK(ThrownCode([] { RandomizedResponse(3, -0.5); }) ==
        ErrorCode::kNegativeEpsilon);
}

TEST_CASE("optimal utility closed form for TV") {
  // 1/(e^2+1): the uniform binary prior at epsilon 2.
  CHECK(OptimalUtility(0.5, 2.0, FDivergence::TotalVariation()) ==
        doctest::Approx(1.0 / (std::exp(2.0) + 1.0)).epsilon(1e-12));
  CHECK(std::abs(OptimalUtility(0.5, 2.0, FDivergence::TotalVariation()) -
                 0.11920) <= 1e-5);
  // At epsilon 0 the TV utility is 1 - q_min.
  for (double q_min : {0.1, 0.25, 0.5, 0.9, 1.0}) {
    CHECK(OptimalUtility(q_min, 0.0, FDivergence::TotalVariation()) ==
          doctest::Approx(1.0 - q_min).epsilon(1e-12));
  }
}

TEST_CASE("optimal utility closed form for KL") {
  // At epsilon 0 the KL utility reduces to ln(1/q_min).
  CHECK(OptimalUtility(0.25, 0.0, FDivergence::KullbackLeibler()) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(std::abs(OptimalUtility(0.25, 0.0, FDivergence::KullbackLeibler()) -
                 1.386294) <= 1e-6);
}

TEST_CASE("optimal utility edge cases and validation") {
  // q_min = 1 means the prior is a point mass; nothing can move.
  CHECK(OptimalUtility(1.0, 3.0, FDivergence::KullbackLeibler()) == 0.0);
  // Infinite f(0) forces infinite utility when q_min < 1.
  const FDivergence f = FDivergence::Custom(
      [](double t) { return (t - 1.0) * (t - 1.0); },
      std::numeric_limits<double>::infinity());
  CHECK(std::isinf(OptimalUtility(0.5, 1.0, f)));
  CHECK(ThrownCode([] {
          OptimalUtility(0.0, 1.0, FDivergence::TotalVariation());
        }) == ErrorCode::kQminOutOfRange);
  CHECK(ThrownCode([] {
          OptimalUtility(1.5, 1.0, FDivergence::TotalVariation());
        }) == ErrorCode::kQminOutOfRange);
  CHECK(ThrownCode([] {
          OptimalUtility(0.5, -1.0, FDivergence::TotalVariation());
        }) == ErrorCode::kNegativeEpsilon);
}

TEST_CASE("TV utility is strictly decreasing in epsilon") {
  const FDivergence tv = FDivergence::TotalVariation();
  for (double q_min : {0.01, 0.2, 0.5, 0.99}) {
    double previous = OptimalUtility(q_min, 0.0, tv);
    for (double eps = 0.25; eps <= 8.0; eps += 0.25) {
      const double value = OptimalUtility(q_min, eps, tv);
      CHECK(value < previous);
      previous = value;
    }
  }
}

TEST_CASE("worst-case divergence of the identity kernel is zero") {
  const Kernel id = Kernel::Identity(3);
  CHECK(WorstCaseDivergence(id, FDivergence::TotalVariation()) == 0.0);
  CHECK(WorstCaseDivergence(id, FDivergence::KullbackLeibler()) == 0.0);
  CHECK(WorstCaseDivergence(id, FDivergence::ChiSquare()) == 0.0);
}

TEST_CASE("worst-case TV of randomized response matches (n-1)/(e^eps+n-1)") {
  const Kernel k = RandomizedResponse(3, kLn2);
  CHECK(WorstCaseDivergence(k, FDivergence::TotalVariation()) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hand-checked 3x3 construction") {
  const Distribution q = ValidateDistribution({0.2, 0.3, 0.5});
  const MechanismBundle bundle = BuildOptimal(q, kLn2);

  // Worked by hand: level denominator 1.2, m = 5/6, renormalized tail
  // (0.375, 0.625) with binary block [[6/11, 5/11], [3/11, 8/11]].
  const std::vector<std::vector<double>> expected = {
      {1.0 / 3.0, 1.0 / 4.0, 5.0 / 12.0},
      {1.0 / 6.0, 5.0 / 11.0, 25.0 / 66.0},
      {1.0 / 6.0, 5.0 / 22.0, 20.0 / 33.0},
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(bundle.sorted_kernel(i, j) - expected[i][j]) <= 1e-12);
    }
  }
  // The prior is already sorted, so both orders coincide.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(bundle.kernel(i, j) == bundle.sorted_kernel(i, j));
    }
  }

  // Independent checks: row sums, stationarity per column, column ratio
  // at most e^eps = 2, smallest diagonal 1/3.
  for (int i = 0; i < 3; ++i) {
    double row = 0.0;
    for (int j = 0; j < 3; ++j) row += bundle.kernel(i, j);
    CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int j = 0; j < 3; ++j) {
    double col = 0.0;
    for (int i = 0; i < 3; ++i) col += q[i] * bundle.kernel(i, j);
    CHECK(col == doctest::Approx(q[j]).epsilon(1e-12));
  }
  for (int j = 0; j < 3; ++j) {
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 3; ++i) {
      lo = std::min(lo, bundle.kernel(i, j));
      hi = std::max(hi, bundle.kernel(i, j));
    }
    CHECK(hi / lo <= 2.0 + 1e-12);
  }
  CHECK(bundle.sorted_kernel.MinDiagonal() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // Column 1 ratio is exactly e^eps.
  CHECK(bundle.kernel(0, 0) / bundle.kernel(1, 0) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // Worst-case TV equals the closed-form utility 2/3.
  CHECK(WorstCaseDivergence(bundle.kernel, FDivergence::TotalVariation()) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(WorstCaseDivergence(bundle.kernel, FDivergence::TotalVariation()) ==
        doctest::Approx(OptimalUtility(0.2, kLn2,
                                       FDivergence::TotalVariation()))
            .epsilon(1e-12));
}

TEST_CASE("epsilon zero collapses every row to the prior") {
  RandomStream rng(31);
  for (std::size_t n : {2, 5, 16}) {
    const Distribution q(testing::RandomPositiveSimplexPoint(rng, n));
    const MechanismBundle bundle = BuildOptimal(q, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(bundle.kernel(i, j) - q[j]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("uniform priors reproduce randomized response") {
  for (std::size_t n : {2, 3, 7, 33, 64}) {
    for (double eps : {0.1, 1.0, 4.0}) {
      const MechanismBundle bundle = BuildOptimal(Distribution::Uniform(n), eps);
      const Kernel rr = RandomizedResponse(n, eps);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(std::abs(bundle.kernel(i, j) - rr(i, j)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("construction agrees with the literal recursion") {
  RandomStream rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.NextWord() % 63;
    const double eps = (trial % 5) * 0.7;
    std::vector<double> sorted = testing::RandomPositiveSimplexPoint(rng, n);
    std::sort(sorted.begin(), sorted.end());
    const std::vector<double> naive = testing::NaiveOptimalSorted(sorted, eps);
    const MechanismBundle bundle = BuildOptimal(Distribution(sorted), eps);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(bundle.sorted_kernel(i, j) - naive[i * n + j]) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("constructed mechanisms satisfy all validity invariants") {
  RandomStream rng(43);
  const std::vector<double> epsilons = {0.0, 0.1, 1.0, kLn2, 2.0, 8.0};
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + rng.NextWord() % 511;
    const Distribution q(testing::RandomPositiveSimplexPoint(rng, n));
    const double eps = epsilons[trial % epsilons.size()];
    const MechanismBundle bundle = BuildOptimal(q, eps);

    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += bundle.kernel(i, j);
      CHECK(std::abs(row - 1.0) <= 1e-9);
    }
    CHECK(VerifyInvariance(bundle.kernel, q, 1e-9).pass);
    CHECK(VerifyLdp(bundle.kernel, eps, 1e-9).pass);

    const std::vector<double> diag = bundle.sorted_kernel.Diagonal();
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(diag[i] <= diag[i + 1] + 1e-15);

    const double q_min = q.MinEntry();
    const double e = std::exp(eps);
    CHECK(std::abs(bundle.sorted_kernel.MinDiagonal() -
                   e * q_min / (e * q_min + 1.0 - q_min)) <= 1e-9);

    // Closed-form diagonal cap, in sorted order.
    const SortResult sorted = SortWithPermutation(q);
    const std::vector<double> cap = DiagonalUpperBound(sorted.sorted, eps);
    for (std::size_t i = 0; i < n; ++i) CHECK(diag[i] <= cap[i] + 1e-12);
  }
}

TEST_CASE("achievability matches the closed-form utility") {
  RandomStream rng(47);
  const std::vector<FDivergence> fs = {
      FDivergence::TotalVariation(), FDivergence::KullbackLeibler(),
      FDivergence::ChiSquare(), FDivergence::SquaredHellinger()};
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng.NextWord() % 127;
    const Distribution q(testing::RandomPositiveSimplexPoint(rng, n));
    for (double eps : {0.0, 0.5, 2.0}) {
      const MechanismBundle bundle = BuildOptimal(q, eps);
      for (const FDivergence& f : fs) {
        CHECK(std::abs(WorstCaseDivergence(bundle.kernel, f) -
                       OptimalUtility(q.MinEntry(), eps, f)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("no simplex point beats the Dirac worst case") {
  RandomStream rng(53);
  const FDivergence tv = FDivergence::TotalVariation();
  const FDivergence kl = FDivergence::KullbackLeibler();
  for (std::size_t n : {3, 11, 20}) {
    const Distribution q(testing::RandomPositiveSimplexPoint(rng, n));
    const MechanismBundle bundle = BuildOptimal(q, 1.5);
    const Kernel rr = RandomizedResponse(n, 1.5);
    for (const Kernel* k : {&bundle.kernel, &rr}) {
      double dirac_tv = 0.0, dirac_kl = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const Distribution d = Distribution::Dirac(n, i);
        const Distribution out = ApplyKernel(d, *k);
        dirac_tv = std::max(dirac_tv, Divergence(tv, d, out));
        dirac_kl = std::max(dirac_kl, Divergence(kl, d, out));
      }
      CHECK(dirac_tv == doctest::Approx(WorstCaseDivergence(*k, tv))
                            .epsilon(1e-12));
      for (int draw = 0; draw < 2000; ++draw) {
        const Distribution p(testing::RandomSimplexPoint(rng, n));
        const Distribution out = ApplyKernel(p, *k);
        CHECK(Divergence(tv, p, out) <= dirac_tv + 1e-9);
        CHECK(Divergence(kl, p, out) <= dirac_kl + 1e-9);
      }
    }
  }
}

TEST_CASE("building on a shuffled prior conjugates the kernel") {
  RandomStream rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.NextWord() % 30;
    // Distinct entries make the sorted order unique, so both builds see the
    // same sorted kernel bit-for-bit.
    std::vector<double> base = testing::RandomPositiveSimplexPoint(rng, n);
    std::sort(base.begin(), base.end());
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (base[i] == base[i + 1]) distinct = false;
    }
    if (!distinct) continue;

    std::vector<std::size_t> shuffle(n);
    for (std::size_t i = 0; i < n; ++i) shuffle[i] = i;
    for (std::size_t i = n; i > 1; --i) {
      std::swap(shuffle[i - 1], shuffle[rng.NextWord() % i]);
    }
    std::vector<double> shuffled(n);
    for (std::size_t i = 0; i < n; ++i) shuffled[i] = base[shuffle[i]];

    const MechanismBundle b0 = BuildOptimal(Distribution(base), 1.2);
    const MechanismBundle b1 = BuildOptimal(Distribution(shuffled), 1.2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(b1.kernel(i, j) == b0.kernel(shuffle[i], shuffle[j]));
      }
    }
  }
}

TEST_CASE("bundle invariants: conjugation identity and stationarity") {
  RandomStream rng(61);
  const std::size_t n = 9;
  const Distribution q(testing::RandomPositiveSimplexPoint(rng, n));
  const MechanismBundle bundle = BuildOptimal(q, 2.5);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(bundle.kernel(i, j) ==
            bundle.sorted_kernel(bundle.perm[i], bundle.perm[j]));
    }
  }
  CHECK(VerifyInvariance(bundle.kernel, bundle.prior, 1e-9).pass);
}

TEST_CASE("construction validates input") {
  CHECK(ThrownCode([] {
          BuildOptimal(ValidateDistribution({0.0, 1.0}), 1.0);
        }) == ErrorCode::kZeroEntry);
  CHECK(ThrownCode([] {
          BuildOptimal(Distribution::Uniform(3), -1.0);
        }) == ErrorCode::kNegativeEpsilon);
  CHECK(ThrownCode([] {
          BuildOptimal(Distribution::Uniform(3),
                       std::numeric_limits<double>::infinity());
        }) == ErrorCode::kNonFiniteEpsilon);
}

TEST_CASE("diagonal upper bound formula") {
  const std::vector<double> a =
      DiagonalUpperBound(ValidateDistribution({0.5, 0.5}), 0.0);
  CHECK(a[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a[1] == doctest::Approx(0.5).epsilon(1e-15));

  const std::vector<double> b =
      DiagonalUpperBound(ValidateDistribution({0.2, 0.3, 0.5}), kLn2);
  CHECK(b[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(b[1] == doctest::Approx(6.0 / 13.0).epsilon(1e-12));
  CHECK(b[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  const std::vector<double> c =
      DiagonalUpperBound(ValidateDistribution({0.01, 0.99}), 2.0);
  CHECK(std::abs(c[0] - 0.0694531) <= 1e-6);
  CHECK(std::abs(c[1] - 0.9986348) <= 1e-6);
  // The first cap is met with equality by the binary mechanism.
  CHECK(c[0] == doctest::Approx(BinaryOptimal(0.01, 2.0)(0, 0)).epsilon(1e-12));

  CHECK(ThrownCode([] {
          DiagonalUpperBound(ValidateDistribution({0.0, 1.0}), 1.0);
        }) == ErrorCode::kZeroEntry);
}

TEST_CASE("applying a kernel to a point mass picks its row") {
  const Kernel k = RandomizedResponse(3, 1.0);
  const Distribution out = ApplyKernel(Distribution::Dirac(3, 0), k);
  for (int j = 0; j < 3; ++j) {
    CHECK(out[j] == doctest::Approx(k(0, j)).epsilon(1e-15));
  }
}

TEST_CASE("kernel application worked examples") {
  const Distribution p = ValidateDistribution({0.05, 0.95});
  const Distribution viaOptimal = ApplyKernel(p, BinaryOptimal(0.01, 2.0));
  CHECK(std::abs(viaOptimal[0] - 0.012402) <= 1e-5);
  CHECK(std::abs(viaOptimal[1] - 0.987598) <= 1e-5);
  CHECK(std::abs(Divergence(FDivergence::TotalVariation(), p, viaOptimal) -
                 0.037598) <= 1e-5);

  const Distribution viaRr = ApplyKernel(p, RandomizedResponse(2, 2.0));
  CHECK(std::abs(viaRr[0] - 0.157284) <= 1e-5);
  CHECK(std::abs(viaRr[1] - 0.842716) <= 1e-5);
  CHECK(std::abs(Divergence(FDivergence::TotalVariation(), p, viaRr) -
                 0.107283) <= 1e-5);

  CHECK(ThrownCode([&] {
          ApplyKernel(ValidateDistribution({0.2, 0.3, 0.5}),
                      RandomizedResponse(2, 1.0));
        }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("ldp verification examples") {
  const LdpReport pass = VerifyLdp(RandomizedResponse(4, 1.5), 1.5, 1e-9);
  CHECK(pass.pass);
  CHECK(pass.max_log_ratio == doctest::Approx(1.5).epsilon(1e-12));

  const LdpReport fail = VerifyLdp(Kernel::Identity(2), 10.0, 1e-9);
  CHECK_FALSE(fail.pass);
  CHECK(std::isinf(fail.max_log_ratio));

  const MechanismBundle bundle =
      BuildOptimal(ValidateDistribution({0.2, 0.3, 0.5}), kLn2);
  const LdpReport built = VerifyLdp(bundle.kernel, kLn2, 1e-9);
  CHECK(built.pass);
  CHECK(built.max_log_ratio == doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_CASE("invariance verification examples") {
  CHECK(VerifyInvariance(RandomizedResponse(2, 1.0),
                         ValidateDistribution({0.5, 0.5}), 1e-12)
            .pass);

  const Distribution q = ValidateDistribution({0.2, 0.3, 0.5});
  CHECK(VerifyInvariance(BuildOptimal(q, kLn2).kernel, q, 1e-9).pass);

  // Randomized response does not keep a skewed prior stationary; the exact
  // deviation is 0.4/(e+1) on both coordinates.
  const InvarianceReport skew = VerifyInvariance(
      RandomizedResponse(2, 1.0), ValidateDistribution({0.3, 0.7}), 1e-9);
  CHECK_FALSE(skew.pass);
  CHECK(skew.max_abs_deviation ==
        doctest::Approx(0.4 / (std::exp(1.0) + 1.0)).epsilon(1e-12));

  CHECK(ThrownCode([&] {
          VerifyInvariance(RandomizedResponse(3, 1.0), q, 1e-9);
        }) == std::nullopt);
  CHECK(ThrownCode([&] {
          VerifyInvariance(RandomizedResponse(2, 1.0), q, 1e-9);
        }) == ErrorCode::kDimensionMismatch);
}

TEST_CASE("mechanism JSON round-trips bit-exactly") {
  RandomStream rng(67);
  const Distribution q(testing::RandomPositiveSimplexPoint(rng, 6));
  const MechanismBundle bundle = BuildOptimal(q, 1.75);
  const std::string json = BundleToJson(bundle);
  const MechanismBundle parsed = BundleFromJson(json);

  CHECK(parsed.epsilon == bundle.epsilon);
  CHECK(parsed.prior.probs() == bundle.prior.probs());
  CHECK(parsed.kernel.entries() == bundle.kernel.entries());
  CHECK(parsed.sorted_kernel.entries() == bundle.sorted_kernel.entries());
  CHECK(parsed.perm == bundle.perm);

  CHECK(ThrownCode([] { BundleFromJson("{"); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(ThrownCode([] { BundleFromJson(R"({"n": 2})"); }) ==
        ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace privsampler
