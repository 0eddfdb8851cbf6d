// SPDX-License-Identifier: Apache-2.0
#include "starshare/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace starshare {

double pathloss_db(double distance_m, double freq_ghz, double exponent) {
  if (distance_m <= 0.0) throw std::domain_error("pathloss_db: distance must be > 0");
  if (freq_ghz <= 0.0) throw std::domain_error("pathloss_db: frequency must be > 0");
  return 32.4 + 10.0 * exponent * std::log10(distance_m) + 20.0 * std::log10(freq_ghz);
}

Eigen::VectorXcd array_response(int num_elements, double azimuth, double elevation,
                                double spacing_over_wavelength) {
  if (num_elements < 1) throw std::domain_error("array_response: need >= 1 element");
  Eigen::VectorXcd a(num_elements);
  const double step =
      2.0 * M_PI * spacing_over_wavelength * std::sin(azimuth) * std::cos(elevation);
  for (int n = 0; n < num_elements; ++n) {
    a(n) = std::polar(1.0, step * n);
  }
  return a;
}

std::pair<double, double> link_angles(const Vec3& from, const Vec3& to) {
  const Vec3 d = to - from;
  const double horiz = std::hypot(d.x(), d.y());
  if (d.norm() == 0.0) throw std::domain_error("link_angles: coincident endpoints");
  return {std::atan2(d.y(), d.x()), std::atan2(d.z(), horiz)};
}

Eigen::MatrixXcd los_channel_matrix(const Vec3& tx, const Vec3& rx, int num_tx,
                                    int num_rx, double freq_ghz, double exponent,
                                    std::complex<double> gain) {
  const auto [az_dep, el_dep] = link_angles(tx, rx);
  const auto [az_arr, el_arr] = link_angles(rx, tx);
  const double pl = pathloss_db((rx - tx).norm(), freq_ghz, exponent);
  const double att = std::pow(10.0, -pl / 20.0);
  const Eigen::VectorXcd a_rx = array_response(num_rx, az_arr, el_arr);
  const Eigen::VectorXcd a_tx = array_response(num_tx, az_dep, el_dep);
  return (gain * att) * (a_rx * a_tx.adjoint());
}

Eigen::VectorXcd los_channel_vector(const Vec3& tx, const Vec3& rx, int num_tx,
                                    double freq_ghz, double exponent,
                                    std::complex<double> gain) {
  const auto [az, el] = link_angles(tx, rx);
  const double pl = pathloss_db((rx - tx).norm(), freq_ghz, exponent);
  const double att = std::pow(10.0, -pl / 20.0);
  return (gain * att) * array_response(num_tx, az, el);
}

Eigen::MatrixXcd synthesize_bs_ris_channel(const SystemConfig& cfg, Rng& rng) {
  return los_channel_matrix(cfg.bs_position, cfg.ris_position, cfg.num_bs_antennas,
                            cfg.num_ris_elements, cfg.carrier_freq_ghz,
                            cfg.pathloss_exponent_los, rng.complex_normal());
}

Eigen::VectorXcd synthesize_direct_channel(const SystemConfig& cfg, const Vec3& from,
                                           const Vec3& to, int num_elements,
                                           double exponent, Rng& rng) {
  return los_channel_vector(from, to, num_elements, cfg.carrier_freq_ghz, exponent,
                            rng.complex_normal());
}

Eigen::MatrixXcd synthesize_cascaded(const Eigen::VectorXcd& g, const Eigen::MatrixXcd& H,
                                     std::complex<double> cascade_gain,
                                     double cascade_pl_db) {
  if (g.size() != H.rows()) {
    throw std::invalid_argument("synthesize_cascaded: g length must match rows of H");
  }
  const double att = std::pow(10.0, -cascade_pl_db / 20.0);
  return (cascade_gain * att) * (g.conjugate().asDiagonal() * H);
}

std::vector<Vec3> sample_ue_positions(const SystemConfig& cfg, Rng& rng) {
  if (cfg.ue_sampling_radius_m <= 0.0) {
    throw std::domain_error("sample_ue_positions: radius must be > 0");
  }
  std::vector<Vec3> pts(cfg.num_users);
  for (int k = 0; k < cfg.num_users; ++k) {
    const double radius = cfg.ue_sampling_radius_m * std::sqrt(rng.uniform());
    const double angle = rng.uniform(0.0, 2.0 * M_PI);
    pts[k] = cfg.ris_position +
             Vec3(radius * std::cos(angle), radius * std::sin(angle), 0.0);
    pts[k].z() = 0.0;
  }
  return pts;
}

ChannelSet build_channel_set(const SystemConfig& cfg, Rng& rng,
                             const std::vector<Vec3>* fixed_ue_positions) {
  const int K = cfg.num_users;
  ChannelSet ch;

  // Draw order is part of the determinism contract: UE positions, H, h0,
  // h_k, g0, g_k.
  ch.ue_positions = sample_ue_positions(cfg, rng);
  if (fixed_ue_positions != nullptr) {
    if (static_cast<int>(fixed_ue_positions->size()) != K) {
      throw std::invalid_argument("build_channel_set: fixed position count != K");
    }
    ch.ue_positions = *fixed_ue_positions;
  }

  ch.H = synthesize_bs_ris_channel(cfg, rng);
  ch.h0 = synthesize_direct_channel(cfg, cfg.bs_position, cfg.primary_rx_position,
                                    cfg.num_bs_antennas, cfg.direct_rx_exponent(), rng);
  ch.h.resize(K);
  for (int k = 0; k < K; ++k) {
    ch.h[k] = synthesize_direct_channel(cfg, cfg.bs_position, ch.ue_positions[k],
                                        cfg.num_bs_antennas, cfg.direct_ue_exponent(),
                                        rng);
  }
  ch.g0 = synthesize_direct_channel(cfg, cfg.ris_position, cfg.primary_rx_position,
                                    cfg.num_ris_elements, cfg.pathloss_exponent_los,
                                    rng);
  ch.g.resize(K);
  for (int k = 0; k < K; ++k) {
    ch.g[k] = synthesize_direct_channel(cfg, cfg.ris_position, ch.ue_positions[k],
                                        cfg.num_ris_elements, cfg.pathloss_exponent_los,
                                        rng);
  }

  const std::complex<double> cg(cfg.cascade_gain, 0.0);
  ch.G0 = synthesize_cascaded(ch.g0, ch.H, cg, cfg.cascade_extra_pathloss_db);
  ch.G.resize(K);
  for (int k = 0; k < K; ++k) {
    ch.G[k] = synthesize_cascaded(ch.g[k], ch.H, cg, cfg.cascade_extra_pathloss_db);
  }
  return ch;
}

}  // namespace starshare
