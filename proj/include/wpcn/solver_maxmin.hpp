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

#ifndef WPCN_SOLVER_MAXMIN_HPP_
#define WPCN_SOLVER_MAXMIN_HPP_

#include <vector>

#include "wpcn/solver_common.hpp"
#include "wpcn/solver_common_fair.hpp"

namespace wpcn {

// Optional per-user rate requirements; the min and the psi gradients use
// rate / requirement instead of the raw rate. All ones by default.
struct MaxminWeights {
  std::vector<double> dl, ul;

  static MaxminWeights ones(int num_users) {
    return MaxminWeights{std::vector<double>(num_users, 1.0),
                         std::vector<double>(num_users, 1.0)};
  }
};

// Time block for the max-min mode: targets phi / psi1k and phi / psi2k;
// users with zero psi keep only their power floor.
void mm_time(EpochSlices* s, const DualState& duals, const ChannelSet& channels,
             const SystemConfig& config, int epoch);

// Power block for the max-min mode (psi-weighted closed forms).
void mm_power(EpochSlices* s, const DualState& duals, const ChannelSet& channels,
              const SystemConfig& config, int epoch);

// Gradient step on the rate-coupling multipliers: each psi moves toward
// the users holding the minimum average rate, is floored at zero and
// renormalized onto the simplex sum(psi1 + psi2) = 1. mu and nu follow the
// shared price update.
void mm_dual_update(DualState* duals, const RateTracker& tracker,
                    const RunningStats& stats, int epoch_1based,
                    const SystemConfig& config,
                    const MaxminWeights& req = MaxminWeights{});

// One epoch of the max-min protocol.
EpochResult mm_epoch(int epoch, DualState* duals, RateTracker* tracker,
                     RunningStats* stats, Allocation* alloc,
                     const ChannelSet& channels, const SystemConfig& config,
                     EpochSlices* warm, const EpochHooks& hooks = {},
                     const MaxminWeights& req = MaxminWeights{});

// The full max-min protocol (alpha = +inf mode).
SolverRun run_mfpi(const ChannelSet& channels, const SystemConfig& config,
                   const EpochHooks& hooks = {},
                   const MaxminWeights& req = MaxminWeights{});

}  // namespace wpcn

#endif  // WPCN_SOLVER_MAXMIN_HPP_
