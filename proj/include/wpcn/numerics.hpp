// Copyright 2026 The wpcnfair Authors
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

#ifndef WPCN_NUMERICS_HPP_
#define WPCN_NUMERICS_HPP_

#include <functional>

namespace wpcn {

// Accuracy contract for the scalar root finders. At least one of the
// tolerances must be positive.
struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_iter = 200;

  void validate() const;
};

// Principal branch of the Lambert W function on [-1/e, 0]: returns w >= -1
// with w * exp(w) == x. Throws std::domain_error outside
// [-1/e - abs_tol, 0].
double lambert_w0(double x, const Tolerance& tol = Tolerance{});

// Marginal rate of the time-scaled log: d/dt [t * log2(1 + x/t)] evaluated
// at snr = x/t, i.e. ln(1+x)/ln2 - x/(ln2*(1+x)). Strictly increasing and
// unbounded for x >= 0, with value 0 at 0.
double rate_time_slope(double x);

// Inverse of rate_time_slope on [0, inf), found by bisection on an
// auto-expanded bracket. Returns +inf if the target exceeds the slope at
// the largest representable snr. Throws ConvergenceError if max_iter is
// exhausted.
double rate_time_slope_inv(double c, const Tolerance& tol = Tolerance{});

// Bisection for a root of a monotone continuous f on [lo, hi]. Stops when
// |f(mid)| <= abs_tol or the bracket width drops below abs_tol + rel_tol
// * |mid|. Throws BracketError when f(lo) and f(hi) have the same sign
// (unless one endpoint is already a root within abs_tol).
double bisect(const std::function<double(double)>& f, double lo, double hi,
              const Tolerance& tol = Tolerance{});

// max{a, b} and min{max{a, b}, c}. clamp_range requires b <= c.
double clamp_lo(double a, double b);
double clamp_range(double a, double b, double c);

// Utility family interpolating from plain sum (alpha = 0) through
// proportional fairness (alpha = 1, log) toward max-min: ln(x) at alpha = 1,
// x^(1-alpha)/(1-alpha) otherwise. Throws std::domain_error for x <= 0 when
// alpha >= 1.
double alpha_utility(double x, double alpha);

}  // namespace wpcn

#endif  // WPCN_NUMERICS_HPP_
