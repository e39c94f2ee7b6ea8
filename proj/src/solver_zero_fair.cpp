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

#include "wpcn/solver_zero_fair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wpcn/errors.hpp"
#include "wpcn/numerics.hpp"

namespace wpcn {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

ZfTimeInfo zf_time_and_ul_power(EpochSlices* s, const DualState& duals,
                                const ChannelSet& channels,
                                const SystemConfig& config, int epoch) {
  const int K = s->num_users();
  const double gap = config.snr_gap_noise();

  std::vector<double> floor_m(K), a(K);
  double floor_sum = 0.0;
  double a_sum = 0.0;
  for (int k = 0; k < K; ++k) {
    floor_m[k] = s->q[k] / config.p_max_w;
    floor_sum += floor_m[k];
    a[k] = channels.g(epoch, k) * s->v[k];
    a_sum += a[k];
  }
  if (floor_sum > 1.0 + 1e-9) {
    throw InfeasibleError("zf_time: power floors exceed the time budget");
  }

  // Demand for time at price C: sum_k max(a_k / C, floor_k).
  auto demand = [&](double c) {
    double total = 0.0;
    for (int k = 0; k < K; ++k) total += std::max(a[k] / c, floor_m[k]);
    return total;
  };

  // Root of demand(C) = 1 with UL power off. +inf when the floors already
  // fill the budget, 0 when there is no split power to serve.
  double c_floor;
  if (floor_sum >= 1.0 - 1e-12) {
    c_floor = kInf;
  } else if (a_sum == 0.0) {
    c_floor = 0.0;
  } else {
    double lo = a_sum;  // demand(a_sum) >= 1
    double hi = lo;
    while (demand(hi) > 1.0) hi *= 2.0;
    for (int it = 0; it < config.root_tol.max_iter; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double d = demand(mid);
      if (std::abs(d - 1.0) <= config.root_tol.abs_tol ||
          hi - lo <= config.root_tol.abs_tol * mid) {
        break;
      }
      (d > 1.0 ? lo : hi) = mid;
    }
    c_floor = 0.5 * (lo + hi);
  }

  // Per-user UL price bound; the single transmitter is the best one.
  int w = -1;
  double d_best = -kInf;
  for (int k = 0; k < K; ++k) {
    const double net = net_ul_price_factor(channels, config, epoch, k);
    const double dk = channels.g(epoch, k) / (kLn2 * duals.nu[k] * net) - gap;
    if (dk > d_best) {
      d_best = dk;
      w = k;
    }
  }

  ZfTimeInfo info;
  info.c_floor_root = c_floor;
  info.d_best = d_best;
  info.ul_user = w;

  std::fill(s->qbar.begin(), s->qbar.end(), 0.0);
  if (c_floor > d_best) {
    // UL transmission is priced out; time goes to the DL demands alone.
    info.c_value = c_floor;
    info.ul_active = false;
    if (std::isinf(c_floor)) {
      s->m = floor_m;
    } else {
      if (!(c_floor > 0.0)) {
        throw DegenerateError("zf_time: no split power and UL priced out");
      }
      for (int k = 0; k < K; ++k) s->m[k] = std::max(a[k] / c_floor, floor_m[k]);
    }
    std::fill(s->n.begin(), s->n.end(), 0.0);
    return info;
  }

  // The best user transmits UL at price C = D_w; its power absorbs exactly
  // the spare time.
  if (!(d_best > 0.0)) {
    throw DegenerateError("zf_time: UL price bound nonpositive with no split power");
  }
  info.c_value = d_best;
  info.ul_active = true;
  double used = 0.0;
  for (int k = 0; k < K; ++k) {
    s->m[k] = std::max(a[k] / d_best, floor_m[k]);
    used += s->m[k];
  }
  const double g_w = channels.g(epoch, w);
  const double qbar_w = clamp_lo(d_best * (1.0 - used) / g_w, 0.0);
  s->qbar[w] = qbar_w;
  std::fill(s->n.begin(), s->n.end(), 0.0);
  s->n[w] = g_w * qbar_w / d_best;
  if (qbar_w == 0.0 && a_sum == 0.0) {
    throw DegenerateError("zf_time: zero split power and zero UL power");
  }
  return info;
}

void zf_dl_and_split_power(EpochSlices* s, const DualState& duals,
                           const ChannelSet& channels, const SystemConfig& config,
                           int epoch) {
  power_block(s, BlockWeights::ones(s->num_users()), duals, channels, config,
              epoch, /*update_qbar=*/false);
}

EpochResult zf_epoch(int epoch, const DualState& duals, const ChannelSet& channels,
                     const SystemConfig& config, const EpochSlices& warm) {
  return alternate_epoch(epoch, BlockWeights::ones(warm.num_users()),
                         /*zf_time=*/true, duals, channels, config, warm);
}

SolverRun run_zfpi(const ChannelSet& channels, const SystemConfig& config,
                   const EpochHooks& hooks) {
  const int K = config.num_users;
  const int M = config.num_epochs;
  SolverRun run;
  run.alloc = Allocation(M, K);
  run.duals = init_duals(channels, config);
  run.mu_trace.reserve(M);

  RunningStats stats(K);
  EpochSlices warm = init_slices(channels, config);
  const BlockWeights ones = BlockWeights::ones(K);
  for (int i = 0; i < M; ++i) {
    EpochResult res = alternate_epoch(i, ones, /*zf_time=*/true, run.duals,
                                      channels, config, warm, hooks);
    if (res.converged) ++run.converged_epochs;
    store_slices(&run.alloc, res.slices, i);
    stats.absorb_epoch(res.slices, run.alloc, channels, config, i);
    dual_price_update(&run.duals, stats, i + 1, config);
    run.mu_trace.push_back(run.duals.mu);
    warm = res.slices;
  }
  return run;
}

}  // namespace wpcn
