// SPDX-License-Identifier: Apache-2.0
#include "starshare/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace starshare {

namespace {

Vec3 vec3_from_json(const nlohmann::json& j, const std::string& key) {
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != 3) {
    throw std::invalid_argument(key + " must be a [x, y, z] array");
  }
  return Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

nlohmann::json vec3_to_json(const Vec3& v) {
  return nlohmann::json::array({v.x(), v.y(), v.z()});
}

}  // namespace

void SystemConfig::validate() const {
  std::ostringstream problems;
  auto require = [&](bool ok, const char* msg) {
    if (!ok) problems << "  - " << msg << "\n";
  };

  require(num_users >= 1, "num_users must be >= 1");
  require(num_bs_antennas >= num_users, "num_bs_antennas must be >= num_users");
  require(num_ris_elements >= 2, "num_ris_elements must be >= 2");
  require(num_ris_elements % 2 == 0, "num_ris_elements must be even");
  require(std::isfinite(max_power_dbm), "max_power_dbm must be finite");
  require(bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
  require(carrier_freq_ghz > 0.0, "carrier_freq_ghz must be > 0");
  require(penalty_constant > 0.0, "penalty_constant must be > 0");
  require(ue_sampling_radius_m > 0.0, "ue_sampling_radius_m must be > 0");
  require(pathloss_exponent_los > 0.0, "pathloss_exponent_los must be > 0");
  require(pathloss_exponent_nlos > 0.0, "pathloss_exponent_nlos must be > 0");
  require(bs_ue_direct_path == "los" || bs_ue_direct_path == "nlos",
          "bs_ue_direct_path must be \"los\" or \"nlos\"");
  require(bs_rx_direct_path == "los" || bs_rx_direct_path == "nlos",
          "bs_rx_direct_path must be \"los\" or \"nlos\"");
  require(cascade_gain != 0.0, "cascade_gain must be nonzero");
  require(sca_tolerance > 0.0, "sca_tolerance must be > 0");
  require(solver_tolerance > 0.0, "solver_tolerance must be > 0");
  require(max_outer_iterations >= 1, "max_outer_iterations must be >= 1");
  require(max_inner_iterations >= 1, "max_inner_iterations must be >= 1");
  require((bs_position - ris_position).norm() > 0.0, "BS and RIS positions coincide");
  require((bs_position - primary_rx_position).norm() > 0.0,
          "BS and primary Rx positions coincide");
  require((ris_position - primary_rx_position).norm() > 0.0,
          "RIS and primary Rx positions coincide");

  const std::string text = problems.str();
  if (!text.empty()) {
    throw std::invalid_argument("invalid SystemConfig:\n" + text);
  }
}

SystemConfig SystemConfig::from_json(const nlohmann::json& j) {
  SystemConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("num_bs_antennas", c.num_bs_antennas);
  get("num_ris_elements", c.num_ris_elements);
  get("num_users", c.num_users);
  get("max_power_dbm", c.max_power_dbm);
  get("min_primary_sinr_db", c.min_primary_sinr_db);
  get("bandwidth_hz", c.bandwidth_hz);
  get("carrier_freq_ghz", c.carrier_freq_ghz);
  get("noise_density_dbm_per_hz", c.noise_density_dbm_per_hz);
  get("primary_rx_power_dbm", c.primary_rx_power_dbm);
  get("penalty_constant", c.penalty_constant);
  if (j.contains("bs_position")) c.bs_position = vec3_from_json(j, "bs_position");
  if (j.contains("ris_position")) c.ris_position = vec3_from_json(j, "ris_position");
  if (j.contains("primary_rx_position")) {
    c.primary_rx_position = vec3_from_json(j, "primary_rx_position");
  }
  get("ue_sampling_radius_m", c.ue_sampling_radius_m);
  get("pathloss_exponent_los", c.pathloss_exponent_los);
  get("pathloss_exponent_nlos", c.pathloss_exponent_nlos);
  get("bs_ue_direct_path", c.bs_ue_direct_path);
  get("bs_rx_direct_path", c.bs_rx_direct_path);
  get("cascade_gain", c.cascade_gain);
  get("cascade_extra_pathloss_db", c.cascade_extra_pathloss_db);
  get("sca_tolerance", c.sca_tolerance);
  get("solver_tolerance", c.solver_tolerance);
  get("max_outer_iterations", c.max_outer_iterations);
  get("max_inner_iterations", c.max_inner_iterations);
  get("rng_seed", c.rng_seed);

  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {
        "num_bs_antennas", "num_ris_elements", "num_users", "max_power_dbm",
        "min_primary_sinr_db", "bandwidth_hz", "carrier_freq_ghz",
        "noise_density_dbm_per_hz", "primary_rx_power_dbm", "penalty_constant",
        "bs_position", "ris_position", "primary_rx_position", "ue_sampling_radius_m",
        "pathloss_exponent_los", "pathloss_exponent_nlos", "bs_ue_direct_path",
        "bs_rx_direct_path", "cascade_gain", "cascade_extra_pathloss_db",
        "sca_tolerance", "solver_tolerance", "max_outer_iterations",
        "max_inner_iterations", "rng_seed"};
    bool found = false;
    for (const char* k : known) found = found || (it.key() == k);
    if (!found) throw std::invalid_argument("unknown config key: " + it.key());
  }
  return c;
}

nlohmann::json SystemConfig::to_json() const {
  nlohmann::json j;
  j["num_bs_antennas"] = num_bs_antennas;
  j["num_ris_elements"] = num_ris_elements;
  j["num_users"] = num_users;
  j["max_power_dbm"] = max_power_dbm;
  j["min_primary_sinr_db"] = min_primary_sinr_db;
  j["bandwidth_hz"] = bandwidth_hz;
  j["carrier_freq_ghz"] = carrier_freq_ghz;
  j["noise_density_dbm_per_hz"] = noise_density_dbm_per_hz;
  j["primary_rx_power_dbm"] = primary_rx_power_dbm;
  j["penalty_constant"] = penalty_constant;
  j["bs_position"] = vec3_to_json(bs_position);
  j["ris_position"] = vec3_to_json(ris_position);
  j["primary_rx_position"] = vec3_to_json(primary_rx_position);
  j["ue_sampling_radius_m"] = ue_sampling_radius_m;
  j["pathloss_exponent_los"] = pathloss_exponent_los;
  j["pathloss_exponent_nlos"] = pathloss_exponent_nlos;
  j["bs_ue_direct_path"] = bs_ue_direct_path;
  j["bs_rx_direct_path"] = bs_rx_direct_path;
  j["cascade_gain"] = cascade_gain;
  j["cascade_extra_pathloss_db"] = cascade_extra_pathloss_db;
  j["sca_tolerance"] = sca_tolerance;
  j["solver_tolerance"] = solver_tolerance;
  j["max_outer_iterations"] = max_outer_iterations;
  j["max_inner_iterations"] = max_inner_iterations;
  j["rng_seed"] = rng_seed;
  return j;
}

SystemConfig SystemConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

}  // namespace starshare
