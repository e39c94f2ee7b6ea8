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

#include "wpcn/channel.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wpcn {

namespace {

// splitmix64; fixed here so the channel draw never depends on standard
// library distribution internals.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in (0, 1]
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }
  // unit-mean exponential
  double next_exp() { return -std::log(next_unit()); }
};

}  // namespace

double ChannelSet::u2u_row_sum(int epoch, int k) const {
  double s = 0.0;
  for (int l = 0; l < num_users; ++l) {
    if (l != k) s += u2u_gain[epoch].at(k, l);
  }
  return s;
}

double ChannelSet::bs_gain_sum(int epoch) const {
  double s = 0.0;
  for (int l = 0; l < num_users; ++l) s += bs_gain.at(epoch, l);
  return s;
}

ChannelSet generate_channels(const SystemConfig& config, double side_m,
                             uint64_t seed) {
  if (!(side_m > 0.0)) throw std::invalid_argument("generate_channels: side_m <= 0");
  const int K = config.num_users;
  const int M = config.num_epochs;

  ChannelSet ch;
  ch.num_epochs = M;
  ch.num_users = K;
  ch.bs_gain = Mat(M, K);
  ch.u2u_gain.assign(M, Mat(K, K));
  ch.user_x.resize(K);
  ch.user_y.resize(K);

  Rng rng(seed);
  // BS sits at the center of the square.
  const double cx = side_m / 2.0, cy = side_m / 2.0;
  for (int k = 0; k < K; ++k) {
    ch.user_x[k] = rng.next_unit() * side_m;
    ch.user_y[k] = rng.next_unit() * side_m;
  }

  auto pathloss = [&](double dist) {
    return config.ref_gain * std::pow(dist, -config.pathloss_exp);
  };

  for (int i = 0; i < M; ++i) {
    for (int k = 0; k < K; ++k) {
      const double dx = ch.user_x[k] - cx;
      const double dy = ch.user_y[k] - cy;
      const double d = std::sqrt(dx * dx + dy * dy);
      ch.bs_gain.at(i, k) = pathloss(d) * rng.next_exp();
    }
    // Reciprocal within an epoch; one fading draw per unordered pair.
    for (int a = 0; a < K; ++a) {
      for (int b = a + 1; b < K; ++b) {
        const double dx = ch.user_x[a] - ch.user_x[b];
        const double dy = ch.user_y[a] - ch.user_y[b];
        const double d = std::sqrt(dx * dx + dy * dy);
        const double gain = pathloss(d) * rng.next_exp();
        ch.u2u_gain[i].at(a, b) = gain;
        ch.u2u_gain[i].at(b, a) = gain;
      }
    }
  }
  return ch;
}

void write_channels(const ChannelSet& channels, std::ostream& out) {
  out << "epoch,entity_a,entity_b,gain\n";
  char buf[64];
  for (int i = 0; i < channels.num_epochs; ++i) {
    for (int k = 0; k < channels.num_users; ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", channels.bs_gain.at(i, k));
      out << (i + 1) << ",0," << (k + 1) << ',' << buf << '\n';
    }
    for (int a = 0; a < channels.num_users; ++a) {
      for (int b = a + 1; b < channels.num_users; ++b) {
        std::snprintf(buf, sizeof(buf), "%.17g", channels.u2u_gain[i].at(a, b));
        out << (i + 1) << ',' << (a + 1) << ',' << (b + 1) << ',' << buf << '\n';
      }
    }
  }
}

std::string channels_to_string(const ChannelSet& channels) {
  std::ostringstream os;
  write_channels(channels, os);
  return os.str();
}

ChannelSet read_channels(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header != "epoch,entity_a,entity_b,gain") {
    throw std::runtime_error("read_channels: bad header");
  }
  struct Row {
    int epoch, a, b;
    double gain;
  };
  std::vector<Row> rows;
  int max_epoch = 0, max_user = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Row r;
    if (std::sscanf(line.c_str(), "%d,%d,%d,%lg", &r.epoch, &r.a, &r.b, &r.gain) != 4) {
      throw std::runtime_error("read_channels: bad row: " + line);
    }
    rows.push_back(r);
    max_epoch = std::max(max_epoch, r.epoch);
    max_user = std::max({max_user, r.a, r.b});
  }
  ChannelSet ch;
  ch.num_epochs = max_epoch;
  ch.num_users = max_user;
  ch.bs_gain = Mat(max_epoch, max_user);
  ch.u2u_gain.assign(max_epoch, Mat(max_user, max_user));
  for (const Row& r : rows) {
    if (r.a == 0) {
      ch.bs_gain.at(r.epoch - 1, r.b - 1) = r.gain;
    } else {
      ch.u2u_gain[r.epoch - 1].at(r.a - 1, r.b - 1) = r.gain;
      ch.u2u_gain[r.epoch - 1].at(r.b - 1, r.a - 1) = r.gain;
    }
  }
  return ch;
}

}  // namespace wpcn
