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

#ifndef WPCN_SOLVER_COMMON_FAIR_HPP_
#define WPCN_SOLVER_COMMON_FAIR_HPP_

#include <vector>

#include "wpcn/solver_common.hpp"

namespace wpcn {

// Online average rates, floored so the (rate)^alpha weights never
// degenerate before the first update lands.
struct RateTracker {
  std::vector<double> dl, ul;
  int epochs_seen = 0;

  static RateTracker initial(int num_users, double rate_floor);

  // Running-mean update: R <- ((i-1)/i) R + (1/i) r, then floored.
  void update(const std::vector<double>& rate_dl, const std::vector<double>& rate_ul,
              double rate_floor);
};

// (tracked rate)^-alpha multipliers for the epoch objective.
BlockWeights cf_weights(const RateTracker& tracker, double alpha);

// Time block for 0 < alpha < inf: each user's time solves the weighted
// slope condition at targets (Rdl_k)^alpha * phi and (Rul_k)^alpha * phi,
// with phi bisected so the epoch's time fills up.
void cf_time(EpochSlices* s, const RateTracker& tracker, const ChannelSet& channels,
             const SystemConfig& config, int epoch);

// Power block for 0 < alpha < inf.
void cf_power(EpochSlices* s, const RateTracker& tracker, const DualState& duals,
              const ChannelSet& channels, const SystemConfig& config, int epoch);

// One epoch of the common-fairness protocol: alternate to convergence,
// fold the epoch rates into the tracker, apply the dual price updates.
EpochResult cf_epoch(int epoch, DualState* duals, RateTracker* tracker,
                     RunningStats* stats, Allocation* alloc,
                     const ChannelSet& channels, const SystemConfig& config,
                     EpochSlices* warm, const EpochHooks& hooks = {});

// The full common-fairness protocol; config.alpha must be finite and > 0.
SolverRun run_cfpi(const ChannelSet& channels, const SystemConfig& config,
                   const EpochHooks& hooks = {});

}  // namespace wpcn

#endif  // WPCN_SOLVER_COMMON_FAIR_HPP_
