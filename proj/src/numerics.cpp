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

#include "wpcn/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wpcn/errors.hpp"

namespace wpcn {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kInvE = 0.36787944117144233;  // 1/e
}  // namespace

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) && !(rel_tol > 0.0)) {
    throw std::invalid_argument("Tolerance: abs_tol or rel_tol must be positive");
  }
  if (abs_tol < 0.0 || rel_tol < 0.0) {
    throw std::invalid_argument("Tolerance: tolerances must be nonnegative");
  }
  if (max_iter < 1) {
    throw std::invalid_argument("Tolerance: max_iter must be >= 1");
  }
}

double lambert_w0(double x, const Tolerance& tol) {
  tol.validate();
  if (!(x <= 0.0) || x < -kInvE - tol.abs_tol) {
    throw std::domain_error("lambert_w0: argument outside [-1/e, 0]: " +
                            std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (x <= -kInvE) return -1.0;

  // Initial guess: series around the branch point where the iteration is
  // ill-conditioned, first-order series near zero otherwise.
  double w;
  const double p2 = 2.0 * (1.0 + std::exp(1.0) * x);
  if (p2 < 0.5) {
    const double p = std::sqrt(p2);
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else {
    w = x * (1.0 + x * (-1.0 + x * 1.5));
  }

  // Halley iteration on f(w) = w e^w - x, with a bisection fallback kept
  // alive on [-1, 0] in case a step leaves the branch.
  double lo = -1.0, hi = 0.0;
  for (int it = 0; it < tol.max_iter; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= tol.abs_tol * kInvE) return w;
    if (f > 0.0) {
      if (w < hi) hi = w;
    } else {
      if (w > lo) lo = w;
    }
    const double fp = ew * (w + 1.0);
    const double denom = fp - (w + 2.0) * f / (2.0 * w + 2.0);
    double next = (denom != 0.0 && std::isfinite(denom)) ? w - f / denom : w;
    if (!(next >= -1.0 && next <= 0.0) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    if (next == w) {
      next = 0.5 * (lo + hi);
      if (next == w) return w;
    }
    w = next;
  }
  // The residual stopped shrinking; w is still bracketed, report it.
  return w;
}

double rate_time_slope(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("rate_time_slope: negative argument");
  }
  // log1p keeps the small-x cancellation benign.
  return std::log1p(x) / kLn2 - x / (kLn2 * (1.0 + x));
}

double rate_time_slope_inv(double c, const Tolerance& tol) {
  tol.validate();
  if (!(c >= 0.0)) {
    throw std::domain_error("rate_time_slope_inv: negative target");
  }
  if (c == 0.0) return 0.0;
  // The slope tops out around 1023 bits at the largest finite snr.
  if (c >= rate_time_slope(std::numeric_limits<double>::max() / 4.0)) {
    return std::numeric_limits<double>::infinity();
  }

  // Auto bracket: [0, 1] for small targets, otherwise a band around the
  // asymptotic inverse 2^(c + 1/ln2), widened until it straddles.
  double lo = 0.0, hi = 1.0;
  if (c > rate_time_slope(1.0)) {
    const double seed = std::exp2(std::min(c + 1.0 / kLn2, 1020.0));
    lo = seed / 4.0;
    hi = seed * 4.0;
    int guard = 0;
    while (rate_time_slope(lo) > c && guard++ < 1100) lo /= 2.0;
    guard = 0;
    while (rate_time_slope(hi) < c && guard++ < 1100) hi *= 2.0;
  } else {
    while (rate_time_slope(hi) < c) hi *= 2.0;
    if (hi > 1.0) lo = hi / 2.0;
  }

  double mid = lo;
  for (int it = 0; it < tol.max_iter; ++it) {
    mid = 0.5 * (lo + hi);
    const double f = rate_time_slope(mid) - c;
    if (std::abs(f) <= tol.abs_tol) return mid;
    if (hi - lo <= tol.abs_tol * mid + tol.rel_tol * std::abs(mid)) return mid;
    (f < 0.0 ? lo : hi) = mid;
  }
  throw ConvergenceError("rate_time_slope_inv: max_iter exhausted at c=" +
                         std::to_string(c));
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              const Tolerance& tol) {
  tol.validate();
  double flo = f(lo);
  double fhi = f(hi);
  if (std::abs(flo) <= tol.abs_tol) return lo;
  if (std::abs(fhi) <= tol.abs_tol) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("bisect: f(lo) and f(hi) have the same sign");
  }
  double mid = lo;
  for (int it = 0; it < tol.max_iter; ++it) {
    mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol.abs_tol) return mid;
    if (hi - lo <= tol.abs_tol + tol.rel_tol * std::abs(mid)) return mid;
    if ((fm > 0.0) == (fhi > 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  throw ConvergenceError("bisect: max_iter exhausted");
}

double clamp_lo(double a, double b) { return a > b ? a : b; }

double clamp_range(double a, double b, double c) {
  if (b > c) {
    throw std::invalid_argument("clamp_range: lower bound exceeds upper bound");
  }
  return a < b ? b : (a > c ? c : a);
}

double alpha_utility(double x, double alpha) {
  if (!(alpha >= 0.0)) {
    throw std::domain_error("alpha_utility: alpha must be >= 0");
  }
  if (alpha == 1.0) {
    if (!(x > 0.0)) throw std::domain_error("alpha_utility: ln requires x > 0");
    return std::log(x);
  }
  if (x < 0.0 || (x == 0.0 && alpha > 1.0)) {
    throw std::domain_error("alpha_utility: x^(1-alpha) undefined at x=" +
                            std::to_string(x));
  }
  return std::pow(x, 1.0 - alpha) / (1.0 - alpha);
}

}  // namespace wpcn
