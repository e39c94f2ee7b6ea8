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

#ifndef WPCN_CHANNEL_HPP_
#define WPCN_CHANNEL_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wpcn/config.hpp"
#include "wpcn/matrix.hpp"

namespace wpcn {

// Power gains for one run: BS<->user per epoch, plus the symmetric
// user<->user table (zero diagonal). Immutable after generation.
struct ChannelSet {
  int num_epochs = 0;
  int num_users = 0;
  Mat bs_gain;                  // [M x K]
  std::vector<Mat> u2u_gain;    // M matrices [K x K], symmetric, zero diag
  std::vector<double> user_x;   // placement, for reference
  std::vector<double> user_y;

  double g(int epoch, int user) const { return bs_gain.at(epoch, user); }
  double g_u2u(int epoch, int a, int b) const { return u2u_gain[epoch].at(a, b); }

  // sum_{l != k} g_{kl}(i), the harvest exposure of user k to the others.
  double u2u_row_sum(int epoch, int k) const;
  // sum_l g_l(i), the BS broadcast exposure within one epoch.
  double bs_gain_sum(int epoch) const;
};

// Draws user positions uniformly in a side_m x side_m square (BS at the
// center) and i.i.d. unit-mean exponential fading per epoch, then applies
// gain = ref_gain * fading * d^-chi to every link. Deterministic in seed;
// the sampling uses a fixed splitmix/xorshift pipeline so the output does
// not depend on the standard library's distribution internals.
ChannelSet generate_channels(const SystemConfig& config, double side_m,
                             uint64_t seed);

// Columnar text form: "epoch,entity_a,entity_b,gain" with entity 0 = BS,
// users 1..K, epoch-major then a then b ordering. User-to-user rows are
// written once with a < b.
void write_channels(const ChannelSet& channels, std::ostream& out);
std::string channels_to_string(const ChannelSet& channels);
ChannelSet read_channels(std::istream& in);

}  // namespace wpcn

#endif  // WPCN_CHANNEL_HPP_
