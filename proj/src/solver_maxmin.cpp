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

#include "wpcn/solver_maxmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wpcn/numerics.hpp"

namespace wpcn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

BlockWeights mm_weights(const DualState& duals) {
  return BlockWeights{duals.psi1, duals.psi2};
}
}  // namespace

void mm_time(EpochSlices* s, const DualState& duals, const ChannelSet& channels,
             const SystemConfig& config, int epoch) {
  const int K = s->num_users();
  std::vector<double> scale_dl(K), scale_ul(K);
  for (int k = 0; k < K; ++k) {
    scale_dl[k] = duals.psi1[k] > 0.0 ? 1.0 / duals.psi1[k] : kInf;
    scale_ul[k] = duals.psi2[k] > 0.0 ? 1.0 / duals.psi2[k] : kInf;
  }
  weighted_time_block(s, scale_dl, scale_ul, channels, config, epoch);
}

void mm_power(EpochSlices* s, const DualState& duals, const ChannelSet& channels,
              const SystemConfig& config, int epoch) {
  power_block(s, mm_weights(duals), duals, channels, config, epoch,
              /*update_qbar=*/true);
}

void mm_dual_update(DualState* duals, const RateTracker& tracker,
                    const RunningStats& stats, int epoch_1based,
                    const SystemConfig& config, const MaxminWeights& req) {
  dual_price_update(duals, stats, epoch_1based, config);

  const int K = static_cast<int>(tracker.dl.size());
  auto weight = [](const std::vector<double>& w, int k) {
    return w.empty() ? 1.0 : w[k];
  };

  double min_rate = kInf;
  double mean_rate = 0.0;
  for (int k = 0; k < K; ++k) {
    const double rdl = tracker.dl[k] / weight(req.dl, k);
    const double rul = tracker.ul[k] / weight(req.ul, k);
    min_rate = std::min({min_rate, rdl, rul});
    mean_rate += rdl + rul;
  }
  mean_rate /= 2.0 * K;

  const double r_ref = std::max(mean_rate, config.rate_floor);
  const double lambda = config.step_psi /
                        (2.0 * K * r_ref * std::sqrt(static_cast<double>(epoch_1based)));
  double total = 0.0;
  for (int k = 0; k < K; ++k) {
    duals->psi1[k] += lambda * (min_rate - tracker.dl[k] / weight(req.dl, k));
    duals->psi2[k] += lambda * (min_rate - tracker.ul[k] / weight(req.ul, k));
    duals->psi1[k] = std::max(0.0, duals->psi1[k]);
    duals->psi2[k] = std::max(0.0, duals->psi2[k]);
    total += duals->psi1[k] + duals->psi2[k];
  }
  if (total <= 0.0) {
    // Every multiplier collapsed; restart from the uniform point.
    std::fill(duals->psi1.begin(), duals->psi1.end(), 1.0 / (2.0 * K));
    std::fill(duals->psi2.begin(), duals->psi2.end(), 1.0 / (2.0 * K));
    return;
  }
  for (int k = 0; k < K; ++k) {
    duals->psi1[k] /= total;
    duals->psi2[k] /= total;
  }
}

EpochResult mm_epoch(int epoch, DualState* duals, RateTracker* tracker,
                     RunningStats* stats, Allocation* alloc,
                     const ChannelSet& channels, const SystemConfig& config,
                     EpochSlices* warm, const EpochHooks& hooks,
                     const MaxminWeights& req) {
  EpochResult res = alternate_epoch(epoch, mm_weights(*duals), /*zf_time=*/false,
                                    *duals, channels, config, *warm, hooks);
  store_slices(alloc, res.slices, epoch);
  stats->absorb_epoch(res.slices, *alloc, channels, config, epoch);

  std::vector<double> rate_dl(config.num_users), rate_ul(config.num_users);
  for (int k = 0; k < config.num_users; ++k) {
    const double g = channels.g(epoch, k);
    rate_dl[k] = dl_rate_bar(res.slices.m[k], res.slices.v[k], g, config);
    rate_ul[k] = ul_rate_bar(res.slices.n[k], res.slices.qbar[k], g, config);
  }
  tracker->update(rate_dl, rate_ul, config.rate_floor);
  mm_dual_update(duals, *tracker, *stats, epoch + 1, config, req);

  *warm = res.slices;
  return res;
}

SolverRun run_mfpi(const ChannelSet& channels, const SystemConfig& config,
                   const EpochHooks& hooks, const MaxminWeights& req) {
  const int K = config.num_users;
  const int M = config.num_epochs;
  SolverRun run;
  run.alloc = Allocation(M, K);
  run.duals = init_duals(channels, config);

  RunningStats stats(K);
  RateTracker tracker = RateTracker::initial(K, config.rate_floor);
  EpochSlices warm = init_slices(channels, config);
  for (int i = 0; i < M; ++i) {
    EpochResult res = mm_epoch(i, &run.duals, &tracker, &stats, &run.alloc,
                               channels, config, &warm, hooks, req);
    if (res.converged) ++run.converged_epochs;
    run.mu_trace.push_back(run.duals.mu);
  }
  run.tracker_dl = tracker.dl;
  run.tracker_ul = tracker.ul;
  return run;
}

}  // namespace wpcn
