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

#include "wpcn/solver_common_fair.hpp"

#include <cmath>
#include <stdexcept>

#include "wpcn/numerics.hpp"

namespace wpcn {

RateTracker RateTracker::initial(int num_users, double rate_floor) {
  RateTracker t;
  t.dl.assign(num_users, rate_floor);
  t.ul.assign(num_users, rate_floor);
  t.epochs_seen = 0;
  return t;
}

void RateTracker::update(const std::vector<double>& rate_dl,
                         const std::vector<double>& rate_ul, double rate_floor) {
  const int i = ++epochs_seen;
  for (size_t k = 0; k < dl.size(); ++k) {
    if (i == 1) {
      dl[k] = rate_dl[k];
      ul[k] = rate_ul[k];
    } else {
      dl[k] = (static_cast<double>(i - 1) / i) * dl[k] + rate_dl[k] / i;
      ul[k] = (static_cast<double>(i - 1) / i) * ul[k] + rate_ul[k] / i;
    }
    if (dl[k] < rate_floor) dl[k] = rate_floor;
    if (ul[k] < rate_floor) ul[k] = rate_floor;
  }
}

BlockWeights cf_weights(const RateTracker& tracker, double alpha) {
  const int K = static_cast<int>(tracker.dl.size());
  BlockWeights w;
  w.dl.resize(K);
  w.ul.resize(K);
  for (int k = 0; k < K; ++k) {
    w.dl[k] = std::pow(tracker.dl[k], -alpha);
    w.ul[k] = std::pow(tracker.ul[k], -alpha);
  }
  return w;
}

void cf_time(EpochSlices* s, const RateTracker& tracker, const ChannelSet& channels,
             const SystemConfig& config, int epoch) {
  const int K = s->num_users();
  std::vector<double> scale_dl(K), scale_ul(K);
  for (int k = 0; k < K; ++k) {
    scale_dl[k] = std::pow(tracker.dl[k], config.alpha);
    scale_ul[k] = std::pow(tracker.ul[k], config.alpha);
  }
  weighted_time_block(s, scale_dl, scale_ul, channels, config, epoch);
}

void cf_power(EpochSlices* s, const RateTracker& tracker, const DualState& duals,
              const ChannelSet& channels, const SystemConfig& config, int epoch) {
  power_block(s, cf_weights(tracker, config.alpha), duals, channels, config, epoch,
              /*update_qbar=*/true);
}

EpochResult cf_epoch(int epoch, DualState* duals, RateTracker* tracker,
                     RunningStats* stats, Allocation* alloc,
                     const ChannelSet& channels, const SystemConfig& config,
                     EpochSlices* warm, const EpochHooks& hooks) {
  EpochResult res =
      alternate_epoch(epoch, cf_weights(*tracker, config.alpha), /*zf_time=*/false,
                      *duals, channels, config, *warm, hooks);
  store_slices(alloc, res.slices, epoch);
  stats->absorb_epoch(res.slices, *alloc, channels, config, epoch);
  dual_price_update(duals, *stats, epoch + 1, config);

  std::vector<double> rate_dl(config.num_users), rate_ul(config.num_users);
  for (int k = 0; k < config.num_users; ++k) {
    const double g = channels.g(epoch, k);
    rate_dl[k] = dl_rate_bar(res.slices.m[k], res.slices.v[k], g, config);
    rate_ul[k] = ul_rate_bar(res.slices.n[k], res.slices.qbar[k], g, config);
  }
  tracker->update(rate_dl, rate_ul, config.rate_floor);

  *warm = res.slices;
  return res;
}

SolverRun run_cfpi(const ChannelSet& channels, const SystemConfig& config,
                   const EpochHooks& hooks) {
  if (!(config.alpha > 0.0) || config.maxmin_mode()) {
    throw std::invalid_argument("run_cfpi: requires finite alpha > 0");
  }
  const int K = config.num_users;
  const int M = config.num_epochs;
  SolverRun run;
  run.alloc = Allocation(M, K);
  run.duals = init_duals(channels, config);

  RunningStats stats(K);
  RateTracker tracker = RateTracker::initial(K, config.rate_floor);
  EpochSlices warm = init_slices(channels, config);
  for (int i = 0; i < M; ++i) {
    EpochResult res = cf_epoch(i, &run.duals, &tracker, &stats, &run.alloc,
                               channels, config, &warm, hooks);
    if (res.converged) ++run.converged_epochs;
    run.mu_trace.push_back(run.duals.mu);
  }
  run.tracker_dl = tracker.dl;
  run.tracker_ul = tracker.ul;
  return run;
}

}  // namespace wpcn
