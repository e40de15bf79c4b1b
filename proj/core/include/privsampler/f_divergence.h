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

#ifndef PRIVSAMPLER_F_DIVERGENCE_H_
#define PRIVSAMPLER_F_DIVERGENCE_H_

#include <functional>
#include <string>

#include "privsampler/distribution.h"

namespace privsampler {

// Descriptor of a convex generator f:(0,inf) -> (-inf,inf] with f(1) = 0,
// defining the divergence D_f(p||q) = sum_x q(x) f(p(x)/q(x)).
//
// Named variants carry analytic values for f(0+) and for the slope
// lim_{t->inf} f(t)/t, which settle the q(x)=0 edge cases:
//
//             f(t)              f(0+)   lim f(t)/t
//   TV        |t-1|/2           1/2     1/2
//   KL        t ln t            0       +inf
//   ChiSq     (t-1)^2           1       +inf
//   Hell^2    (sqrt(t)-1)^2     1       1
//
// Custom generators supply f and f(0+) explicitly; the library never
// extrapolates the limit numerically. A custom generator is treated as
// superlinear: its slope at infinity is taken to be +inf.
class FDivergence {
 public:
  enum class Kind {
    kTotalVariation,
    kKullbackLeibler,
    kChiSquare,
    kSquaredHellinger,
    kCustom,
  };

  static FDivergence TotalVariation();
  static FDivergence KullbackLeibler();
  static FDivergence ChiSquare();
  static FDivergence SquaredHellinger();

  // f must be convex on (0,inf) with f(1) = 0 (checked within 1e-12);
  // f_at_zero is f(0+), must be >= 0 and may be +inf.
  static FDivergence Custom(std::function<double(double)> f,
                            double f_at_zero);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  // f(t) for t > 0.
  double Generator(double t) const;
  // f(0+), possibly +inf.
  double AtZero() const { return f_at_zero_; }
  // lim_{t->inf} f(t)/t, possibly +inf.
  double SlopeAtInfinity() const { return slope_at_infinity_; }

 private:
  FDivergence(Kind kind, std::string name, std::function<double(double)> f,
              double f_at_zero, double slope_at_infinity);

  Kind kind_;
  std::string name_;
  std::function<double(double)> f_;
  double f_at_zero_;
  double slope_at_infinity_;
};

// D_f(p||q) = sum_x q(x) f(p(x)/q(x)) with the conventions f(0) = f(0+) and
// 0 f(0/0) = 0. Where q(x) = 0 and p(x) > 0 the term is p(x) * slope at
// infinity (finite for TV and squared Hellinger, +inf for KL, chi-square,
// and custom generators). Throws DimensionMismatch on unequal supports.
double Divergence(const FDivergence& f, const Distribution& p,
                  const Distribution& q);

}  // namespace privsampler

#endif  // PRIVSAMPLER_F_DIVERGENCE_H_
