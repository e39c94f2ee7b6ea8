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

#ifndef WPCN_SOLVER_ZERO_FAIR_HPP_
#define WPCN_SOLVER_ZERO_FAIR_HPP_

#include "wpcn/solver_common.hpp"

namespace wpcn {

// Diagnostics of the closed-form sum-rate time block.
struct ZfTimeInfo {
  double c_value = 0.0;      // the common time price C(i)
  double c_floor_root = 0.0; // root of the floor-only equation (inf if none)
  double d_best = 0.0;       // best UL price among users
  int ul_user = -1;          // the single user allowed positive UL power
  bool ul_active = false;
};

// Sum-rate time and UL power block: reads (q, v) from the slices, writes
// (m, n, qbar). Time is proportional to each user's available power with a
// per-user floor q/p_max; at most one user (the best UL price D_k) gets
// positive UL power. Throws InfeasibleError when the floors exceed the
// time budget and DegenerateError when nothing pins the time down.
ZfTimeInfo zf_time_and_ul_power(EpochSlices* s, const DualState& duals,
                                const ChannelSet& channels,
                                const SystemConfig& config, int epoch);

// Sum-rate DL power and split block: reads (m, n), writes (q, v).
void zf_dl_and_split_power(EpochSlices* s, const DualState& duals,
                           const ChannelSet& channels, const SystemConfig& config,
                           int epoch);

// One epoch of the sum-rate protocol: alternates the two blocks from the
// warm start until the epoch objective settles.
EpochResult zf_epoch(int epoch, const DualState& duals, const ChannelSet& channels,
                     const SystemConfig& config, const EpochSlices& warm);

// Online price update shared with the other protocols.
inline void zf_dual_update(DualState* duals, const RunningStats& stats,
                           int epoch_1based, const SystemConfig& config) {
  dual_price_update(duals, stats, epoch_1based, config);
}

// The full sum-rate protocol over all M epochs.
SolverRun run_zfpi(const ChannelSet& channels, const SystemConfig& config,
                   const EpochHooks& hooks = {});

}  // namespace wpcn

#endif  // WPCN_SOLVER_ZERO_FAIR_HPP_
