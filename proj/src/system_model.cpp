// SPDX-License-Identifier: Apache-2.0
#include "starshare/system_model.hpp"

#include <cmath>
#include <stdexcept>

namespace starshare {

Eigen::VectorXd StarRisProfile::energy_residuals() const {
  return phi_t.cwiseAbs2() + phi_r.cwiseAbs2() - Eigen::VectorXd::Ones(phi_t.size());
}

double StarRisProfile::max_abs_energy_residual() const {
  return energy_residuals().cwiseAbs().maxCoeff();
}

EffectiveChannels effective_channels(const ChannelSet& ch, const StarRisProfile& prof) {
  EffectiveChannels eff;
  eff.z_t0 = ch.h0.adjoint() + prof.phi_t.transpose() * ch.G0;
  eff.z_r.resize(ch.h.size());
  for (std::size_t k = 0; k < ch.h.size(); ++k) {
    eff.z_r[k] = ch.h[k].adjoint() + prof.phi_r.transpose() * ch.G[k];
  }
  return eff;
}

double primary_sinr(const Beamformer& bf, const StarRisProfile& prof,
                    const ChannelSet& ch, const SystemConfig& cfg) {
  const Eigen::RowVectorXcd z_t0 = ch.h0.adjoint() + prof.phi_t.transpose() * ch.G0;
  const double interference = (z_t0 * bf.W).squaredNorm();
  return cfg.primary_rx_power_w() / (interference + cfg.noise_power_w());
}

double secondary_sinr(int k, const Beamformer& bf, const StarRisProfile& prof,
                      const ChannelSet& ch, const SystemConfig& cfg) {
  if (k < 0 || k >= cfg.num_users) throw std::out_of_range("secondary_sinr: bad user");
  const Eigen::RowVectorXcd z_rk =
      ch.h[k].adjoint() + prof.phi_r.transpose() * ch.G[k];
  const Eigen::RowVectorXcd projections = z_rk * bf.W;
  const double signal = std::norm(projections(k));
  double interference = 0.0;
  for (int i = 0; i < cfg.num_users; ++i) {
    if (i != k) interference += std::norm(projections(i));
  }
  return signal / (interference + cfg.noise_power_w());
}

double sum_rate(const Beamformer& bf, const StarRisProfile& prof, const ChannelSet& ch,
                const SystemConfig& cfg) {
  double rate = 0.0;
  for (int k = 0; k < cfg.num_users; ++k) {
    rate += cfg.bandwidth_hz * std::log2(1.0 + secondary_sinr(k, bf, prof, ch, cfg));
  }
  return rate;
}

PerformanceMetrics evaluate_metrics(const Beamformer& bf, const StarRisProfile& prof,
                                    const ChannelSet& ch, const SystemConfig& cfg) {
  PerformanceMetrics m;
  m.per_user_sinr.resize(cfg.num_users);
  for (int k = 0; k < cfg.num_users; ++k) {
    m.per_user_sinr(k) = secondary_sinr(k, bf, prof, ch, cfg);
    m.sum_rate_bps += cfg.bandwidth_hz * std::log2(1.0 + m.per_user_sinr(k));
  }
  m.spectral_efficiency_bps_hz = m.sum_rate_bps / cfg.bandwidth_hz;
  m.primary_sinr = primary_sinr(bf, prof, ch, cfg);
  const Eigen::RowVectorXcd z_t0 = ch.h0.adjoint() + prof.phi_t.transpose() * ch.G0;
  m.interference_at_rx_w = (z_t0 * bf.W).squaredNorm();
  return m;
}

FeasibilityReport check_feasibility(const Beamformer& bf, const StarRisProfile& prof,
                                    const SystemConfig& cfg, const ChannelSet& ch) {
  FeasibilityReport rep;
  const double gamma = primary_sinr(bf, prof, ch, cfg);
  rep.primary_sinr_rel_margin =
      (gamma - cfg.min_primary_sinr_linear()) / cfg.min_primary_sinr_linear();
  rep.power_rel_margin = (cfg.max_power_w() - bf.total_power()) / cfg.max_power_w();
  rep.energy_residuals = prof.energy_residuals();
  const double amp_max =
      std::max(prof.phi_t.cwiseAbs().maxCoeff(), prof.phi_r.cwiseAbs().maxCoeff());
  rep.max_amplitude_excess = std::max(0.0, amp_max - 1.0);
  return rep;
}

nlohmann::json metrics_to_json(const PerformanceMetrics& m) {
  nlohmann::json j;
  j["sum_rate_bps"] = m.sum_rate_bps;
  j["spectral_efficiency_bps_hz"] = m.spectral_efficiency_bps_hz;
  j["primary_sinr_db"] = linear_to_db(m.primary_sinr);
  j["interference_at_rx_dbm"] =
      m.interference_at_rx_w > 0.0 ? watts_to_dbm(m.interference_at_rx_w)
                                   : -std::numeric_limits<double>::infinity();
  j["per_user_sinr_db"] = nlohmann::json::array();
  for (int k = 0; k < m.per_user_sinr.size(); ++k) {
    j["per_user_sinr_db"].push_back(linear_to_db(m.per_user_sinr(k)));
  }
  return j;
}

}  // namespace starshare
