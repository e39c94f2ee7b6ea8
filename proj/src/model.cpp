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

#include "wpcn/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wpcn/numerics.hpp"

namespace wpcn {

DualState DualState::uniform(int num_users, double nu0) {
  DualState d;
  d.mu = 0.0;
  d.nu.assign(num_users, nu0);
  d.psi1.assign(num_users, 1.0 / (2.0 * num_users));
  d.psi2.assign(num_users, 1.0 / (2.0 * num_users));
  return d;
}

double perspective_rate(double t, double e, double g, double gap_noise) {
  if (t <= 0.0 || e <= 0.0) return 0.0;
  return t * std::log2(1.0 + g * e / (gap_noise * t));
}

double harvested_energy_bar(const Allocation& alloc, const ChannelSet& channels,
                            const SystemConfig& config, int epoch, int user) {
  if (epoch < 0 || epoch >= alloc.num_epochs) {
    throw std::out_of_range("harvested_energy_bar: epoch out of range");
  }
  if (user < 0 || user >= alloc.num_users) {
    throw std::out_of_range("harvested_energy_bar: user out of range");
  }
  const int K = alloc.num_users;
  double e = 0.0;
  double q_sum = 0.0;
  for (int l = 0; l < K; ++l) q_sum += alloc.q.at(epoch, l);
  e += config.zeta_bs * channels.g(epoch, user) * (q_sum - alloc.v.at(epoch, user));
  for (int l = 0; l < user; ++l) {
    e += config.zeta_user * channels.g_u2u(epoch, l, user) * alloc.qbar.at(epoch, l);
  }
  if (epoch > 0) {
    for (int l = user + 1; l < K; ++l) {
      e += config.zeta_user * channels.g_u2u(epoch - 1, l, user) *
           alloc.qbar.at(epoch - 1, l);
    }
  }
  return e;
}

const char* constraint_name(Constraint c) {
  switch (c) {
    case Constraint::kTimeBudget: return "time_budget";
    case Constraint::kInstPower: return "inst_power";
    case Constraint::kAvgPower: return "avg_power";
    case Constraint::kEnergy: return "energy";
    case Constraint::kSplitLeQ: return "split_le_q";
    case Constraint::kNonNegative: return "non_negative";
  }
  return "?";
}

std::vector<Violation> check_feasibility(const Allocation& alloc,
                                         const ChannelSet& channels,
                                         const SystemConfig& config, double tol,
                                         const FeasibilityMask& mask) {
  const int M = alloc.num_epochs;
  const int K = alloc.num_users;
  if (channels.num_epochs != M || channels.num_users != K ||
      alloc.m.rows() != M || alloc.m.cols() != K) {
    throw std::invalid_argument("check_feasibility: inconsistent shapes");
  }

  std::vector<Violation> out;
  auto add = [&out](Constraint c, int i, int k, double amount) {
    out.push_back(Violation{c, i, k, amount});
  };

  if (mask.non_negative) {
    const Mat* mats[] = {&alloc.m, &alloc.n, &alloc.q, &alloc.qbar, &alloc.v};
    for (const Mat* mm : mats) {
      for (int i = 0; i < M; ++i) {
        for (int k = 0; k < K; ++k) {
          if (mm->at(i, k) < -tol) add(Constraint::kNonNegative, i, k, -mm->at(i, k));
        }
      }
    }
  }
  if (mask.time_budget) {
    for (int i = 0; i < M; ++i) {
      double s = 0.0;
      for (int k = 0; k < K; ++k) s += alloc.m.at(i, k) + alloc.n.at(i, k);
      if (s > 1.0 + tol) add(Constraint::kTimeBudget, i, -1, s - 1.0);
    }
  }
  if (mask.inst_power) {
    for (int i = 0; i < M; ++i) {
      for (int k = 0; k < K; ++k) {
        const double excess = alloc.q.at(i, k) - config.p_max_w * alloc.m.at(i, k);
        if (excess > tol * config.p_max_w) add(Constraint::kInstPower, i, k, excess);
      }
    }
  }
  if (mask.split_le_q) {
    for (int i = 0; i < M; ++i) {
      for (int k = 0; k < K; ++k) {
        const double excess = alloc.v.at(i, k) - alloc.q.at(i, k);
        if (excess > tol * config.p_max_w) add(Constraint::kSplitLeQ, i, k, excess);
      }
    }
  }
  if (mask.avg_power) {
    double total = 0.0;
    for (int i = 0; i < M; ++i) {
      for (int k = 0; k < K; ++k) total += alloc.q.at(i, k);
    }
    const double avg = total / M;
    if (avg > config.p_avg_w * (1.0 + tol)) {
      add(Constraint::kAvgPower, -1, -1, avg - config.p_avg_w);
    }
  }
  if (mask.energy) {
    for (int k = 0; k < K; ++k) {
      double spent = 0.0, harvested = 0.0;
      for (int i = 0; i < M; ++i) {
        spent += alloc.qbar.at(i, k);
        harvested += harvested_energy_bar(alloc, channels, config, i, k);
      }
      if (spent > harvested + tol * std::max(1.0, harvested)) {
        add(Constraint::kEnergy, -1, k, spent - harvested);
      }
    }
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << constraint_name(v.which) << " epoch=" << v.epoch << " user=" << v.user
       << " amount=" << v.amount << '\n';
  }
  return os.str();
}

OriginalAllocation recover_original(const Allocation& alloc) {
  const int M = alloc.num_epochs;
  const int K = alloc.num_users;
  OriginalAllocation o;
  o.num_epochs = M;
  o.num_users = K;
  o.m = alloc.m;
  o.n = alloc.n;
  o.p = Mat(M, K);
  o.pbar = Mat(M, K);
  o.rho = Mat(M, K);
  o.p_active.assign(static_cast<size_t>(M) * K, 0);
  o.pbar_active.assign(static_cast<size_t>(M) * K, 0);
  o.rho_active.assign(static_cast<size_t>(M) * K, 0);
  for (int i = 0; i < M; ++i) {
    for (int k = 0; k < K; ++k) {
      const size_t id = o.idx(i, k);
      if (alloc.m.at(i, k) > 0.0) {
        o.p.at(i, k) = alloc.q.at(i, k) / alloc.m.at(i, k);
        o.p_active[id] = 1;
      }
      if (alloc.n.at(i, k) > 0.0) {
        o.pbar.at(i, k) = alloc.qbar.at(i, k) / alloc.n.at(i, k);
        o.pbar_active[id] = 1;
      }
      if (alloc.q.at(i, k) > 0.0) {
        o.rho.at(i, k) = alloc.v.at(i, k) / alloc.q.at(i, k);
        o.rho_active[id] = 1;
      }
    }
  }
  return o;
}

void average_rates(const Allocation& alloc, const ChannelSet& channels,
                   const SystemConfig& config, std::vector<double>* dl,
                   std::vector<double>* ul) {
  const int M = alloc.num_epochs;
  const int K = alloc.num_users;
  dl->assign(K, 0.0);
  ul->assign(K, 0.0);
  for (int i = 0; i < M; ++i) {
    for (int k = 0; k < K; ++k) {
      const double g = channels.g(i, k);
      (*dl)[k] += dl_rate_bar(alloc.m.at(i, k), alloc.v.at(i, k), g, config);
      (*ul)[k] += ul_rate_bar(alloc.n.at(i, k), alloc.qbar.at(i, k), g, config);
    }
  }
  for (int k = 0; k < K; ++k) {
    (*dl)[k] /= M;
    (*ul)[k] /= M;
  }
}

double objective_value(const Allocation& alloc, const ChannelSet& channels,
                       const SystemConfig& config) {
  std::vector<double> dl, ul;
  average_rates(alloc, channels, config, &dl, &ul);
  double total = 0.0;
  for (int k = 0; k < alloc.num_users; ++k) {
    total += alpha_utility(dl[k], config.alpha);
    total += alpha_utility(ul[k], config.alpha);
  }
  return total;
}

}  // namespace wpcn
