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

#ifndef WPCN_MODEL_HPP_
#define WPCN_MODEL_HPP_

#include <string>
#include <vector>

#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/matrix.hpp"

namespace wpcn {

// Decision variables of the convexified problem, per epoch per user.
// m, n are time fractions; q, qbar, v are epoch energy budgets (watts with
// T = 1): DL transmit, UL transmit, and the DL share routed to the
// information decoder.
struct Allocation {
  int num_epochs = 0;
  int num_users = 0;
  Mat m, n, q, qbar, v;

  Allocation() = default;
  Allocation(int epochs, int users)
      : num_epochs(epochs),
        num_users(users),
        m(epochs, users),
        n(epochs, users),
        q(epochs, users),
        qbar(epochs, users),
        v(epochs, users) {}
};

// Physical variables of the original formulation. Slots whose divisor is
// zero carry no transmission; they are flagged inactive instead of being
// forced to an arbitrary number.
struct OriginalAllocation {
  int num_epochs = 0;
  int num_users = 0;
  Mat m, n;
  Mat p, pbar, rho;
  std::vector<uint8_t> p_active, pbar_active, rho_active;  // [M*K]

  bool active_p(int i, int k) const { return p_active[idx(i, k)] != 0; }
  bool active_pbar(int i, int k) const { return pbar_active[idx(i, k)] != 0; }
  bool active_rho(int i, int k) const { return rho_active[idx(i, k)] != 0; }
  size_t idx(int i, int k) const {
    return static_cast<size_t>(i) * num_users + k;
  }
};

// Lagrange multipliers evolved across epochs: mu prices the average BS
// power, nu_k the per-user energy balance, psi the max-min rate coupling.
struct DualState {
  double mu = 0.0;
  std::vector<double> nu;
  std::vector<double> psi1, psi2;

  static DualState uniform(int num_users, double nu0);
};

// t * log2(1 + g*e / (gap * t)) extended continuously with value 0 at
// t = 0 (and at e = 0).
double perspective_rate(double t, double e, double g, double gap_noise);

inline double dl_rate_bar(double m, double v, double g, const SystemConfig& c) {
  return perspective_rate(m, v, g, c.snr_gap_noise());
}
inline double ul_rate_bar(double n, double qbar, double g, const SystemConfig& c) {
  return perspective_rate(n, qbar, g, c.snr_gap_noise());
}

// Energy collected by user k across epoch i (0-based): the BS broadcast
// minus the share split to k's own decoder, plus earlier users' UL in this
// epoch and later users' UL in the previous one. qbar(-1) is zero.
double harvested_energy_bar(const Allocation& alloc, const ChannelSet& channels,
                            const SystemConfig& config, int epoch, int user);

enum class Constraint {
  kTimeBudget,    // sum_k (m + n) <= 1 per epoch
  kInstPower,     // q <= p_max * m
  kAvgPower,      // (1/M) sum q <= p_avg
  kEnergy,        // sum_i qbar_k <= sum_i Ebar_k per user
  kSplitLeQ,      // v <= q
  kNonNegative,
};

const char* constraint_name(Constraint c);

struct Violation {
  Constraint which;
  int epoch;   // -1 when the constraint aggregates over epochs
  int user;    // -1 when the constraint aggregates over users
  double amount;
};

struct FeasibilityMask {
  bool time_budget = true;
  bool inst_power = true;
  bool avg_power = true;
  bool energy = true;
  bool split_le_q = true;
  bool non_negative = true;

  // The constraints the per-epoch solvers guarantee structurally; the
  // average-power and energy budgets are only tracked by dual prices.
  static FeasibilityMask per_epoch() {
    FeasibilityMask m;
    m.avg_power = false;
    m.energy = false;
    return m;
  }
};

// Reports every violated constraint with indices and magnitude; empty
// result iff feasible within tol. Throws std::invalid_argument on shape
// mismatch.
std::vector<Violation> check_feasibility(const Allocation& alloc,
                                         const ChannelSet& channels,
                                         const SystemConfig& config,
                                         double tol,
                                         const FeasibilityMask& mask = {});

std::string describe(const std::vector<Violation>& violations);

// p = q/m, pbar = qbar/n, rho = v/q where the divisors are positive;
// other slots are marked inactive.
OriginalAllocation recover_original(const Allocation& alloc);

// Per-user average rates over the M epochs, DL then UL.
void average_rates(const Allocation& alloc, const ChannelSet& channels,
                   const SystemConfig& config, std::vector<double>* dl,
                   std::vector<double>* ul);

// sum_k U_alpha(avg DL_k) + sum_k U_alpha(avg UL_k). Throws
// std::domain_error when alpha >= 1 and some average rate is zero.
double objective_value(const Allocation& alloc, const ChannelSet& channels,
                       const SystemConfig& config);

}  // namespace wpcn

#endif  // WPCN_MODEL_HPP_
