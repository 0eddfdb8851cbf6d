// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "json.hpp"

namespace starshare {

using Vec3 = Eigen::Vector3d;

inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w * 1e3); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Scenario description: geometry, radio constants and solver knobs.
/// dB/dBm quantities keep their unit in the field name; use the *_w()
/// accessors for linear-scale values.
struct SystemConfig {
  int num_bs_antennas = 16;   // M
  int num_ris_elements = 32;  // N, must be even
  int num_users = 4;          // K

  double max_power_dbm = 35.0;
  double min_primary_sinr_db = 20.0;
  double bandwidth_hz = 1e6;
  double carrier_freq_ghz = 28.0;
  double noise_density_dbm_per_hz = -174.0;  // applies to the primary Rx and every UE
  double primary_rx_power_dbm = -50.0;
  double penalty_constant = 10.0;  // initial energy penalty, in units of B*K/ln2

  Vec3 bs_position{0.0, 25.0, 0.0};
  Vec3 ris_position{50.0, 0.0, 0.0};
  Vec3 primary_rx_position{60.0, 5.0, 0.0};
  double ue_sampling_radius_m = 5.0;

  double pathloss_exponent_los = 2.0;
  double pathloss_exponent_nlos = 5.0;
  // Which exponent the direct (non-RIS) links use. Surface-assisted links are
  // always LoS; street-level UEs default to blocked direct paths.
  std::string bs_ue_direct_path = "nlos";
  std::string bs_rx_direct_path = "los";

  // Extra scalar applied on top of diag(g^H)H when forming cascaded channels.
  double cascade_gain = 1.0;
  double cascade_extra_pathloss_db = 0.0;

  double sca_tolerance = 1e-4;
  double solver_tolerance = 1e-6;
  int max_outer_iterations = 30;
  int max_inner_iterations = 15;
  std::uint64_t rng_seed = 1;

  double max_power_w() const { return dbm_to_watts(max_power_dbm); }
  double min_primary_sinr_linear() const { return db_to_linear(min_primary_sinr_db); }
  double noise_power_w() const {
    return dbm_to_watts(noise_density_dbm_per_hz + 10.0 * std::log10(bandwidth_hz));
  }
  double primary_rx_power_w() const { return dbm_to_watts(primary_rx_power_dbm); }
  double interference_budget_w() const {
    return primary_rx_power_w() / min_primary_sinr_linear();
  }
  double direct_ue_exponent() const {
    return bs_ue_direct_path == "los" ? pathloss_exponent_los : pathloss_exponent_nlos;
  }
  double direct_rx_exponent() const {
    return bs_rx_direct_path == "los" ? pathloss_exponent_los : pathloss_exponent_nlos;
  }

  /// Throws std::invalid_argument listing every violated requirement.
  void validate() const;

  static SystemConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static SystemConfig from_file(const std::string& path);
};

}  // namespace starshare
