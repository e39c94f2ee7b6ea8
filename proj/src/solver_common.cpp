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

#include "wpcn/solver_common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wpcn/errors.hpp"
#include "wpcn/numerics.hpp"
#include "wpcn/solver_zero_fair.hpp"

namespace wpcn {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

double net_ul_price_factor(const ChannelSet& channels, const SystemConfig& config,
                           int epoch, int user) {
  const double factor = 1.0 - config.zeta_user * channels.u2u_row_sum(epoch, user);
  if (!(factor > 0.0)) {
    throw DegenerateError(
        "net UL price factor nonpositive: user harvests more than it spends "
        "(epoch " + std::to_string(epoch) + ", user " + std::to_string(user) + ")");
  }
  return factor;
}

double epoch_rate_sum(const EpochSlices& s, const ChannelSet& channels,
                      const SystemConfig& config, int epoch) {
  double total = 0.0;
  for (int k = 0; k < s.num_users(); ++k) {
    const double g = channels.g(epoch, k);
    total += dl_rate_bar(s.m[k], s.v[k], g, config);
    total += ul_rate_bar(s.n[k], s.qbar[k], g, config);
  }
  return total;
}

double epoch_weighted_rate_sum(const EpochSlices& s, const BlockWeights& w,
                               const ChannelSet& channels,
                               const SystemConfig& config, int epoch) {
  double total = 0.0;
  for (int k = 0; k < s.num_users(); ++k) {
    const double g = channels.g(epoch, k);
    total += w.dl[k] * dl_rate_bar(s.m[k], s.v[k], g, config);
    total += w.ul[k] * ul_rate_bar(s.n[k], s.qbar[k], g, config);
  }
  return total;
}

double epoch_objective(const EpochSlices& s, const BlockWeights& w,
                       const DualState& duals, const ChannelSet& channels,
                       const SystemConfig& config, int epoch) {
  const int K = s.num_users();
  double value = epoch_weighted_rate_sum(s, w, channels, config, epoch);
  const double g_sum = channels.bs_gain_sum(epoch);
  for (int k = 0; k < K; ++k) {
    const double g = channels.g(epoch, k);
    value += config.zeta_bs * g_sum * duals.nu[k] * s.q[k];
    value -= config.zeta_bs * duals.nu[k] * g * s.v[k];
    const double net = 1.0 - config.zeta_user * channels.u2u_row_sum(epoch, k);
    value -= duals.nu[k] * s.qbar[k] * net;
    value -= duals.mu / config.num_epochs * s.q[k];
  }
  return value;
}

void power_block(EpochSlices* s, const BlockWeights& w, const DualState& duals,
                 const ChannelSet& channels, const SystemConfig& config,
                 int epoch, bool update_qbar) {
  const int K = s->num_users();
  const double gap = config.snr_gap_noise();
  const double g_sum = channels.bs_gain_sum(epoch);
  for (int k = 0; k < K; ++k) {
    const double g = channels.g(epoch, k);
    const double m = s->m[k];
    const double nu = duals.nu[k];
    const double cap = config.p_max_w * m;
    const double raw_v = w.dl[k] * m / (kLn2 * config.zeta_bs * nu * g) - gap * m / g;
    s->v[k] = clamp_range(raw_v, 0.0, cap);
    // Bang-bang DL power on the average-power price threshold; ties take
    // the full-power branch.
    s->q[k] = (duals.mu / config.num_epochs > config.zeta_bs * nu * g_sum)
                  ? s->v[k]
                  : cap;
    if (update_qbar) {
      const double net = net_ul_price_factor(channels, config, epoch, k);
      const double n = s->n[k];
      const double raw_qbar = w.ul[k] * n / (kLn2 * nu * net) - gap * n / g;
      s->qbar[k] = clamp_lo(raw_qbar, 0.0);
    }
  }
}

void weighted_time_block(EpochSlices* s, const std::vector<double>& price_scale_dl,
                         const std::vector<double>& price_scale_ul,
                         const ChannelSet& channels, const SystemConfig& config,
                         int epoch) {
  const int K = s->num_users();
  const double gap = config.snr_gap_noise();

  std::vector<double> floor_m(K), a(K), b(K);
  double floor_sum = 0.0;
  bool any_driver = false;
  for (int k = 0; k < K; ++k) {
    floor_m[k] = s->q[k] / config.p_max_w;
    floor_sum += floor_m[k];
    a[k] = channels.g(epoch, k) * s->v[k];
    b[k] = channels.g(epoch, k) * s->qbar[k];
    if (a[k] > 0.0 && price_scale_dl[k] < kInf) any_driver = true;
    if (b[k] > 0.0 && price_scale_ul[k] < kInf) any_driver = true;
  }
  if (floor_sum > 1.0 + 1e-9) {
    throw InfeasibleError("weighted_time_block: power floors exceed the time budget");
  }

  std::vector<double> m(K), n(K);
  // Evaluates the full-time equation at price phi and keeps the slices.
  auto fill_at = [&](double phi) {
    double total = 0.0;
    for (int k = 0; k < K; ++k) {
      double mk = floor_m[k];
      if (a[k] > 0.0 && price_scale_dl[k] < kInf) {
        const double snr = rate_time_slope_inv(price_scale_dl[k] * phi, config.root_tol);
        mk = std::max(a[k] / (gap * snr), floor_m[k]);
      }
      double nk = 0.0;
      if (b[k] > 0.0 && price_scale_ul[k] < kInf) {
        const double snr = rate_time_slope_inv(price_scale_ul[k] * phi, config.root_tol);
        nk = b[k] / (gap * snr);
      }
      m[k] = mk;
      n[k] = nk;
      total += mk + nk;
    }
    return total;
  };

  bool solved = false;
  if (!any_driver || floor_sum >= 1.0 - 1e-12) {
    if (floor_sum >= 1.0 - 1e-12) {
      for (int k = 0; k < K; ++k) {
        m[k] = floor_m[k];
        n[k] = 0.0;
      }
      solved = true;
    } else {
      throw DegenerateError("weighted_time_block: no term can absorb the spare time");
    }
  }

  if (!solved) {
    // Bracket the unique root of sum(m + n) = 1: the left side decreases
    // from +inf to the floor sum as phi grows.
    double hi = 1.0;
    double shi = fill_at(hi);
    int guard = 0;
    while (shi >= 1.0 && guard++ < 1100) {
      hi *= 2.0;
      shi = fill_at(hi);
    }
    double lo = 0.0;
    if (shi >= 1.0) {
      throw DegenerateError("weighted_time_block: time demand never falls below budget");
    }
    if (hi > 1.0) {
      lo = hi / 2.0;
    } else {
      double slo = fill_at(hi / 2.0);
      lo = hi / 2.0;
      guard = 0;
      while (slo < 1.0 && guard++ < 1100) {
        hi = lo;
        lo /= 2.0;
        slo = fill_at(lo);
        if (lo < 1e-300) break;
      }
      if (slo < 1.0) {
        throw DegenerateError("weighted_time_block: time demand stuck below budget");
      }
    }
    for (int it = 0; it < config.root_tol.max_iter; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double smid = fill_at(mid);
      if (std::abs(smid - 1.0) <= config.root_tol.abs_tol) {
        solved = true;
        break;
      }
      (smid > 1.0 ? lo : hi) = mid;
    }
    if (!solved) {
      // Accept the last midpoint only if it meets the budget closely
      // enough for the full-time property.
      const double total = fill_at(0.5 * (lo + hi));
      if (std::abs(total - 1.0) > 1e-9) {
        throw ConvergenceError("weighted_time_block: bisection stalled at " +
                               std::to_string(total));
      }
    }
  }

  s->m = m;
  s->n = n;
}

void degenerate_time_fallback(EpochSlices* s, const ChannelSet& channels,
                              const SystemConfig& config, int epoch) {
  const int K = s->num_users();
  double floor_sum = 0.0;
  double best = 0.0;
  int best_user = -1;
  for (int k = 0; k < K; ++k) {
    s->m[k] = s->q[k] / config.p_max_w;
    s->n[k] = 0.0;
    floor_sum += s->m[k];
    const double demand = channels.g(epoch, k) * s->q[k];
    if (demand > best) {
      best = demand;
      best_user = k;
    }
  }
  if (best_user >= 0) {
    s->m[best_user] += 1.0 - floor_sum;
  } else {
    // Nothing transmits at all; split evenly for reproducibility.
    for (int k = 0; k < K; ++k) {
      s->m[k] = 1.0 / (2.0 * K);
      s->n[k] = 1.0 / (2.0 * K);
    }
  }
}

void RunningStats::absorb_epoch(const EpochSlices& s, const Allocation& alloc,
                                const ChannelSet& channels,
                                const SystemConfig& config, int epoch) {
  for (int k = 0; k < s.num_users(); ++k) {
    sum_q_total += s.q[k];
    sum_qbar[k] += s.qbar[k];
    sum_harvest[k] += harvested_energy_bar(alloc, channels, config, epoch, k);
  }
  sum_bs_gain += channels.bs_gain_sum(epoch);
}

void dual_price_update(DualState* duals, const RunningStats& stats, int epoch_1based,
                       const SystemConfig& config) {
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(epoch_1based));
  const int K = static_cast<int>(duals->nu.size());

  // mu: running average power against the budget. The step is normalized
  // so a 100% budget violation moves mu by step_mu/sqrt(i) of the
  // threshold scale M * zeta * nu * sum(g).
  std::vector<double> nu_sorted = duals->nu;
  std::nth_element(nu_sorted.begin(), nu_sorted.begin() + K / 2, nu_sorted.end());
  const double nu_med = nu_sorted[K / 2];
  const double gsum_avg = stats.sum_bs_gain / epoch_1based;
  const double thr_ref = std::max(config.zeta_bs * nu_med * gsum_avg, 1e-300);
  const double avg_power = stats.sum_q_total / epoch_1based;
  double grad_norm = (avg_power - config.p_avg_w) / config.p_avg_w;
  grad_norm = clamp_range(grad_norm, -2.0, 2.0);
  const double lambda0 =
      config.step_mu * config.num_epochs * thr_ref * inv_sqrt / config.p_avg_w;
  duals->mu = std::max(0.0, duals->mu + lambda0 * (grad_norm * config.p_avg_w));

  // nu_k: running spent-vs-harvested energy, with the step normalized by
  // the harvest scale so the price moves by a bounded relative amount.
  for (int k = 0; k < K; ++k) {
    const double avg_spent = stats.sum_qbar[k] / epoch_1based;
    const double avg_harv = stats.sum_harvest[k] / epoch_1based;
    const double grad = avg_spent - avg_harv;
    if (grad == 0.0) continue;
    const double e_ref = std::max(std::max(avg_harv, avg_spent), 1e-300);
    double rel = config.step_nu * (grad / e_ref) * inv_sqrt;
    rel = clamp_range(rel, -0.5, 1.0);
    duals->nu[k] = std::max(config.nu_floor, duals->nu[k] * (1.0 + rel));
  }
}

EpochResult alternate_epoch(int epoch, const BlockWeights& weights, bool zf_time,
                            const DualState& duals, const ChannelSet& channels,
                            const SystemConfig& config, const EpochSlices& warm,
                            const EpochHooks& hooks) {
  EpochResult res;
  res.slices = warm;
  EpochSlices& s = res.slices;
  const int K = s.num_users();

  std::vector<double> scale_dl, scale_ul;
  if (!zf_time) {
    scale_dl.resize(K);
    scale_ul.resize(K);
    for (int k = 0; k < K; ++k) {
      scale_dl[k] = weights.dl[k] > 0.0 ? 1.0 / weights.dl[k] : kInf;
      scale_ul[k] = weights.ul[k] > 0.0 ? 1.0 / weights.ul[k] : kInf;
    }
  }

  double prev = epoch_objective(s, weights, duals, channels, config, epoch);
  res.objective_trace.push_back(prev);

  for (int pass = 0; pass < config.max_inner_iters; ++pass) {
    res.inner_iters = pass + 1;
    try {
      if (zf_time) {
        zf_time_and_ul_power(&s, duals, channels, config, epoch);
      } else {
        weighted_time_block(&s, scale_dl, scale_ul, channels, config, epoch);
      }
    } catch (const DegenerateError&) {
      if (zf_time) std::fill(s.qbar.begin(), s.qbar.end(), 0.0);
      degenerate_time_fallback(&s, channels, config, epoch);
      res.degenerate = true;
    }
    res.objective_trace.push_back(
        epoch_objective(s, weights, duals, channels, config, epoch));

    power_block(&s, weights, duals, channels, config, epoch, !zf_time);
    if (hooks.force_v_zero) {
      std::fill(s.v.begin(), s.v.end(), 0.0);
    } else if (hooks.force_v_half_q) {
      for (int k = 0; k < K; ++k) s.v[k] = 0.5 * s.q[k];
    }
    const double now = epoch_objective(s, weights, duals, channels, config, epoch);
    res.objective_trace.push_back(now);
    res.rate_trace.push_back(epoch_rate_sum(s, channels, config, epoch));

    if (std::abs(now - prev) <= config.inner_tol * std::max(1.0, std::abs(prev))) {
      res.converged = true;
      break;
    }
    prev = now;
  }
  return res;
}

DualState init_duals(const ChannelSet& channels, const SystemConfig& config) {
  const int K = config.num_users;
  const int M = config.num_epochs;
  std::vector<double> mean_gain(K, 0.0);
  for (int i = 0; i < M; ++i) {
    for (int k = 0; k < K; ++k) mean_gain[k] += channels.g(i, k);
  }
  double c_ref = 0.0;
  for (int k = 0; k < K; ++k) {
    mean_gain[k] /= M;
    c_ref += mean_gain[k];
  }
  c_ref *= 0.5 * config.p_max_w / K;

  DualState d = DualState::uniform(K, 1.0);
  for (int k = 0; k < K; ++k) {
    d.nu[k] = std::max(config.nu_floor,
                       mean_gain[k] / (kLn2 * (c_ref + config.snr_gap_noise())));
  }
  return d;
}

EpochSlices init_slices(const ChannelSet& channels, const SystemConfig& config) {
  const int K = config.num_users;
  EpochSlices s(K);
  const double q0 = std::min(config.p_max_w / (2.0 * K), config.p_avg_w / K);
  for (int k = 0; k < K; ++k) {
    s.m[k] = 1.0 / (2.0 * K);
    s.n[k] = 1.0 / (2.0 * K);
    s.q[k] = q0;
    s.v[k] = 0.5 * q0;
    // One epoch-scale guess of harvestable UL energy.
    double mg = 0.0;
    for (int i = 0; i < config.num_epochs; ++i) mg += channels.g(i, k);
    mg /= config.num_epochs;
    s.qbar[k] = config.zeta_bs * mg * K * q0;
  }
  return s;
}

void store_slices(Allocation* alloc, const EpochSlices& s, int epoch) {
  for (int k = 0; k < s.num_users(); ++k) {
    alloc->m.at(epoch, k) = s.m[k];
    alloc->n.at(epoch, k) = s.n[k];
    alloc->q.at(epoch, k) = s.q[k];
    alloc->qbar.at(epoch, k) = s.qbar[k];
    alloc->v.at(epoch, k) = s.v[k];
  }
}

EpochSlices load_slices(const Allocation& alloc, int epoch) {
  EpochSlices s(alloc.num_users);
  for (int k = 0; k < alloc.num_users; ++k) {
    s.m[k] = alloc.m.at(epoch, k);
    s.n[k] = alloc.n.at(epoch, k);
    s.q[k] = alloc.q.at(epoch, k);
    s.qbar[k] = alloc.qbar.at(epoch, k);
    s.v[k] = alloc.v.at(epoch, k);
  }
  return s;
}

}  // namespace wpcn
