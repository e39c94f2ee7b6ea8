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

#ifndef WPCN_CONFIG_HPP_
#define WPCN_CONFIG_HPP_

#include <string>

#include "wpcn/numerics.hpp"

namespace wpcn {

// Every scalar parameter of the network and of the solvers. Angles of the
// classic setup: K users dropped uniformly in a square with the base
// station at its center, M TDMA epochs of unit duration, flat Rayleigh
// fading redrawn per epoch.
struct SystemConfig {
  int num_users = 10;    // K
  int num_epochs = 1000; // M

  double noise_w = 3.9810717055349725e-14;  // sigma^2, -104 dBm
  double snr_gap = 9.5499258602143595;      // Gamma, 9.8 dB, linear
  double zeta_bs = 0.5;                     // harvest efficiency, BS signal
  double zeta_user = 0.5;                   // harvest efficiency, user signals
  double p_max_w = 5.0;                     // instantaneous BS power cap
  double p_avg_w = 2.5;                     // average BS power cap

  // Fairness exponent; +inf selects the max-min mode.
  double alpha = 0.0;

  double area_side_m = 10.0;
  double pathloss_exp = 3.0;
  double ref_gain = 1e-3;  // average gain at 1 m

  // Dual-ascent step scales; the per-epoch step is c / sqrt(i) with an
  // additional normalization by the constraint scale (see solvers).
  double step_mu = 0.5;
  double step_nu = 0.5;
  double step_psi = 2.0;

  double inner_tol = 1e-9;    // relative stop for the per-epoch alternation
  int max_inner_iters = 200;
  double nu_floor = 1e-12;    // epsilon_nu: nu appears in denominators
  double rate_floor = 1e-6;   // epsilon_R for tracked average rates
  Tolerance root_tol{1e-12, 0.0, 400};

  double snr_gap_noise() const { return snr_gap * noise_w; }
  bool maxmin_mode() const;

  // Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

// Loads a flat JSON object whose keys mirror the field names above
// (num_users/k_users aliases accepted as "k" and "m"). dB-scaled inputs are
// accepted via the explicit keys "sigma2_dbm" and "gamma_db" and converted
// at load.
SystemConfig load_config(const std::string& path);
SystemConfig parse_config_json(const std::string& text);

}  // namespace wpcn

#endif  // WPCN_CONFIG_HPP_
