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

#ifndef WPCN_SOLVER_COMMON_HPP_
#define WPCN_SOLVER_COMMON_HPP_

#include <vector>

#include "wpcn/channel.hpp"
#include "wpcn/config.hpp"
#include "wpcn/model.hpp"

namespace wpcn {

// One epoch's slice of the decision variables.
struct EpochSlices {
  std::vector<double> m, n, q, qbar, v;

  EpochSlices() = default;
  explicit EpochSlices(int num_users)
      : m(num_users, 0.0),
        n(num_users, 0.0),
        q(num_users, 0.0),
        qbar(num_users, 0.0),
        v(num_users, 0.0) {}
  int num_users() const { return static_cast<int>(m.size()); }
};

// Multipliers on the per-user rate terms of the epoch objective: all ones
// for the sum-rate case, tracked (avg rate)^-alpha for common fairness,
// psi for max-min.
struct BlockWeights {
  std::vector<double> dl, ul;

  static BlockWeights ones(int num_users) {
    return BlockWeights{std::vector<double>(num_users, 1.0),
                        std::vector<double>(num_users, 1.0)};
  }
};

// The per-epoch dualized objective the alternating blocks maximize:
//
//   sum_k [Wdl_k rbar_dl_k + Wul_k rbar_ul_k]
//   + zeta * (sum_l g_l) * (sum_k nu_k q_k)        DL harvest credit
//   - zeta * sum_k nu_k g_k v_k                    own-split debit
//   - sum_k nu_k qbar_k (1 - zeta0 sum_{l!=k} g_kl) net UL spend
//   - (mu/M) sum_k q_k
//
// The energy prices keep the per-user nu on the cross-user sums, which is
// the multiplier structure the closed-form block solutions solve.
double epoch_objective(const EpochSlices& s, const BlockWeights& w,
                       const DualState& duals, const ChannelSet& channels,
                       const SystemConfig& config, int epoch);

// Plain rate content of an epoch slice, sum_k (rbar_dl + rbar_ul).
double epoch_rate_sum(const EpochSlices& s, const ChannelSet& channels,
                      const SystemConfig& config, int epoch);

// Weighted rate content, sum_k (Wdl rbar_dl + Wul rbar_ul).
double epoch_weighted_rate_sum(const EpochSlices& s, const BlockWeights& w,
                               const ChannelSet& channels,
                               const SystemConfig& config, int epoch);

// Block solve for the powers with (m, n) fixed: the split power
// water-fills against the weighted rate slope at price zeta*nu_k*g_k,
// capped to [0, p_max*m]; the DL power is bang-bang between v and p_max*m
// on the average-power price threshold. With update_qbar the UL power is
// also recomputed from its weighted closed form (the sum-rate protocol
// instead assigns qbar inside its time block).
void power_block(EpochSlices* s, const BlockWeights& w, const DualState& duals,
                 const ChannelSet& channels, const SystemConfig& config,
                 int epoch, bool update_qbar);

// Block solve for (m, n) with powers fixed, for the weighted cases: each
// user's time satisfies h(snr) = price_scale * phi with phi chosen by
// bisection so the epoch's time fills up exactly. price_scale_dl/ul may be
// +inf (zero weight), pinning that user to its floor. Throws
// InfeasibleError when the floors alone exceed the budget and
// DegenerateError when no positive term can absorb the spare time.
void weighted_time_block(EpochSlices* s, const std::vector<double>& price_scale_dl,
                         const std::vector<double>& price_scale_ul,
                         const ChannelSet& channels, const SystemConfig& config,
                         int epoch);

// Deterministic completion for epochs whose optimum is not pinned down:
// floors first, the leftover time to the user with the largest g*q (all-m),
// an even m/n split when everything is zero.
void degenerate_time_fallback(EpochSlices* s, const ChannelSet& channels,
                              const SystemConfig& config, int epoch);

// 1 - zeta0 * sum_{l != k} g_kl(i); must stay positive for the UL power
// closed form. Throws DegenerateError otherwise.
double net_ul_price_factor(const ChannelSet& channels, const SystemConfig& config,
                           int epoch, int user);

// Running history the online dual updates consume.
struct RunningStats {
  double sum_q_total = 0.0;             // sum over epochs of sum_k q
  double sum_bs_gain = 0.0;             // sum over epochs of sum_l g_l
  std::vector<double> sum_qbar, sum_harvest;

  explicit RunningStats(int num_users)
      : sum_qbar(num_users, 0.0), sum_harvest(num_users, 0.0) {}

  void absorb_epoch(const EpochSlices& s, const Allocation& alloc,
                    const ChannelSet& channels, const SystemConfig& config,
                    int epoch);
};

// Stochastic-gradient price update after epoch i (1-based): mu tracks the
// running average BS power against its budget, nu_k the running spent
// against harvested energy. Steps decay as 1/sqrt(i) and are normalized by
// the running constraint scale; projections keep mu >= 0 and
// nu >= nu_floor.
void dual_price_update(DualState* duals, const RunningStats& stats, int epoch_1based,
                       const SystemConfig& config);

// Per-epoch alternation shared by the three protocols. Returns the
// converged slices plus the objective trace (epoch_objective after every
// block solve, nondecreasing) and rate trace. `weights` fixes the rate
// multipliers for the whole epoch; `zf_time` selects the closed-form
// sum-rate time block instead of the weighted one.
struct EpochResult {
  EpochSlices slices;
  std::vector<double> objective_trace;
  std::vector<double> rate_trace;
  int inner_iters = 0;
  bool converged = false;
  bool degenerate = false;
};

struct EpochHooks {
  bool force_v_half_q = false;  // baseline variant: v = q/2 after power
  bool force_v_zero = false;    // baseline variant: v = 0 after power
};

EpochResult alternate_epoch(int epoch, const BlockWeights& weights, bool zf_time,
                            const DualState& duals, const ChannelSet& channels,
                            const SystemConfig& config, const EpochSlices& warm,
                            const EpochHooks& hooks = {});

// A finished protocol run: the whole allocation, final prices, and the
// traces the reports consume.
struct SolverRun {
  Allocation alloc;
  DualState duals;
  int converged_epochs = 0;
  std::vector<double> mu_trace;
  std::vector<double> tracker_dl, tracker_ul;  // final online average rates
};

// Price initialization from long-term channel statistics: nu_k starts
// where user k's UL price D_k sits near the typical time price, mu at
// zero.
DualState init_duals(const ChannelSet& channels, const SystemConfig& config);

// Starting point for the first epoch's alternation: even time split, equal
// DL power at the tighter of the two power caps, half split, one
// epoch-scale guess of UL energy.
EpochSlices init_slices(const ChannelSet& channels, const SystemConfig& config);

void store_slices(Allocation* alloc, const EpochSlices& s, int epoch);
EpochSlices load_slices(const Allocation& alloc, int epoch);

}  // namespace wpcn

#endif  // WPCN_SOLVER_COMMON_HPP_
