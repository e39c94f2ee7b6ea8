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

#ifndef WPCN_ORACLE_HPP_
#define WPCN_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "wpcn/model.hpp"
#include "wpcn/solver_common.hpp"

namespace wpcn {

// Search controls for the brute-force oracles.
struct GridOptions {
  int pts_per_dim = 0;        // 0 = pick from the dimension count
  int refine_passes = 3;
  int64_t eval_budget = 10'000'000;
};

// Which variables a grid search may move; the rest stay at their input
// values. q is explored as a fraction of p_max*m and v as a fraction of q,
// so the box is feasible by construction.
struct FreeVars {
  bool m = false, n = false, q = false, qbar = false, v = false;

  static FreeVars time_block() { return FreeVars{true, true, false, true, false}; }
  static FreeVars power_block() { return FreeVars{false, false, true, false, true}; }
  static FreeVars all() { return FreeVars{true, true, true, true, true}; }
};

struct GridResult {
  EpochSlices slices;
  double utility = 0.0;
  int64_t evals = 0;
};

// Exhaustive successive-refinement search over one epoch's dualized
// objective (the same surrogate the closed-form blocks maximize), finest
// grid point wins. Throws BudgetError past eval_budget.
GridResult grid_refine_epoch(int epoch, const FreeVars& free, const EpochSlices& base,
                             const BlockWeights& weights, const DualState& duals,
                             const ChannelSet& channels, const SystemConfig& config,
                             const GridOptions& options = {});

struct FullGridResult {
  Allocation alloc;
  double utility = 0.0;
  int64_t evals = 0;
};

// Brute-force search of the complete problem (hard average-power and
// energy constraints, raw utility objective) for K*M small enough that
// 5*K*M dimensions stay tractable.
FullGridResult grid_refine_full(const ChannelSet& channels,
                                const SystemConfig& config,
                                const GridOptions& options = {});

struct PgResult {
  Allocation alloc;
  double utility = 0.0;
  std::vector<double> trace;  // objective after every accepted step
  int iterations = 0;
};

// First-order ascent of the raw utility with Dykstra projection onto the
// linear constraint set; the DL power follows the largest feasible value
// (it only relaxes the energy constraint). Throws ConvergenceError when
// the projected gradient fails to fall below tol.
PgResult projected_gradient_solve(const ChannelSet& channels,
                                  const SystemConfig& config, double tol = 1e-6,
                                  int max_iter = 20000);

// Max normalized stationarity residual of the epoch Lagrangian over the
// coordinates strictly inside their clamps, by central finite differences.
// Interior time coordinates are compared against their common price
// (estimated as the median derivative); power coordinates against zero.
// Returns 0 when nothing is interior.
double kkt_residual(const EpochSlices& s, const BlockWeights& weights,
                    const DualState& duals, const ChannelSet& channels,
                    const SystemConfig& config, int epoch);

}  // namespace wpcn

#endif  // WPCN_ORACLE_HPP_
