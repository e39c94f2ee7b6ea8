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

#include "wpcn/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpcn {

bool SystemConfig::maxmin_mode() const { return std::isinf(alpha); }

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
  if (num_users < 1) fail("num_users must be >= 1");
  if (num_epochs < 1) fail("num_epochs must be >= 1");
  if (!(noise_w > 0.0)) fail("noise power must be positive");
  if (!(snr_gap >= 1.0)) fail("snr gap must be >= 1 (linear)");
  if (!(zeta_bs > 0.0 && zeta_bs <= 1.0)) fail("zeta_bs must be in (0, 1]");
  if (!(zeta_user >= 0.0 && zeta_user <= 1.0)) fail("zeta_user must be in [0, 1]");
  if (!(p_max_w > 0.0)) fail("p_max must be positive");
  if (!(p_avg_w > 0.0 && p_avg_w <= p_max_w)) fail("p_avg must be in (0, p_max]");
  if (!(alpha >= 0.0)) fail("alpha must be >= 0");
  if (!(area_side_m > 0.0)) fail("area side must be positive");
  if (!(pathloss_exp > 0.0)) fail("pathloss exponent must be positive");
  if (!(ref_gain > 0.0)) fail("reference gain must be positive");
  if (!(step_mu > 0.0 && step_nu > 0.0 && step_psi > 0.0)) fail("step scales must be positive");
  if (!(inner_tol > 0.0)) fail("inner_tol must be positive");
  if (max_inner_iters < 1) fail("max_inner_iters must be >= 1");
  if (!(nu_floor > 0.0)) fail("nu_floor must be positive");
  if (!(rate_floor > 0.0)) fail("rate_floor must be positive");
  root_tol.validate();
}

namespace {

double as_number(const nlohmann::json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") {
      return std::numeric_limits<double>::infinity();
    }
    try {
      size_t pos = 0;
      const double parsed = std::stod(s, &pos);
      if (pos == s.size()) return parsed;
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("config: key '" + key + "' is not a number");
}

}  // namespace

SystemConfig parse_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  SystemConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const nlohmann::json& v = it.value();
    auto num = [&]() { return as_number(v, key); };
    if (key == "num_users" || key == "k_users" || key == "k") {
      c.num_users = static_cast<int>(num());
    } else if (key == "num_epochs" || key == "m_epochs" || key == "m") {
      c.num_epochs = static_cast<int>(num());
    } else if (key == "sigma2_w" || key == "noise_w") {
      c.noise_w = num();
    } else if (key == "sigma2_dbm") {
      c.noise_w = 1e-3 * std::pow(10.0, num() / 10.0);
    } else if (key == "gamma" || key == "snr_gap") {
      c.snr_gap = num();
    } else if (key == "gamma_db") {
      c.snr_gap = std::pow(10.0, num() / 10.0);
    } else if (key == "zeta") {
      c.zeta_bs = num();
    } else if (key == "zeta0") {
      c.zeta_user = num();
    } else if (key == "p_max_w" || key == "p_max") {
      c.p_max_w = num();
    } else if (key == "p_avg_w" || key == "p_avg") {
      c.p_avg_w = num();
    } else if (key == "alpha") {
      c.alpha = num();
    } else if (key == "area_side_m") {
      c.area_side_m = num();
    } else if (key == "pathloss_exp" || key == "chi") {
      c.pathloss_exp = num();
    } else if (key == "ref_gain") {
      c.ref_gain = num();
    } else if (key == "step_mu") {
      c.step_mu = num();
    } else if (key == "step_nu") {
      c.step_nu = num();
    } else if (key == "step_psi") {
      c.step_psi = num();
    } else if (key == "inner_tol") {
      c.inner_tol = num();
    } else if (key == "max_inner_iters") {
      c.max_inner_iters = static_cast<int>(num());
    } else if (key == "nu_floor") {
      c.nu_floor = num();
    } else if (key == "rate_floor") {
      c.rate_floor = num();
    } else if (key == "root_abs_tol") {
      c.root_tol.abs_tol = num();
    } else if (key == "root_max_iter") {
      c.root_tol.max_iter = static_cast<int>(num());
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_json(buf.str());
}

}  // namespace wpcn
