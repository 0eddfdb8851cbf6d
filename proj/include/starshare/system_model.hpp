// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <vector>

#include "json.hpp"
#include "starshare/channel.hpp"
#include "starshare/config.hpp"

namespace starshare {

/// Energy-splitting surface state: per-element transmission and reflection
/// coefficients T_n = sqrt(beta_t) e^{j theta_t}, R_n = sqrt(beta_r) e^{j theta_r}.
struct StarRisProfile {
  Eigen::VectorXcd phi_t;
  Eigen::VectorXcd phi_r;

  /// |T_n|^2 + |R_n|^2 - 1 per element.
  Eigen::VectorXd energy_residuals() const;
  double max_abs_energy_residual() const;
  bool strict_es(double tol = 1e-6) const { return max_abs_energy_residual() <= tol; }

  static StarRisProfile zero(int n) {
    return {Eigen::VectorXcd::Zero(n), Eigen::VectorXcd::Zero(n)};
  }
};

struct Beamformer {
  Eigen::MatrixXcd W;  // M x K, column k serves user k
  double total_power() const { return W.squaredNorm(); }
};

struct PerformanceMetrics {
  double sum_rate_bps = 0.0;
  double spectral_efficiency_bps_hz = 0.0;
  double primary_sinr = 0.0;          // linear
  double interference_at_rx_w = 0.0;  // sum_k |z_t0 w_k|^2
  Eigen::VectorXd per_user_sinr;      // linear
};

/// Residuals of every design constraint. Power and SINR margins are relative
/// (they live on very different absolute scales); energy and amplitude
/// residuals are absolute.
struct FeasibilityReport {
  double primary_sinr_rel_margin = 0.0;  // (gamma - gamma_min) / gamma_min
  double power_rel_margin = 0.0;         // (P_max - P) / P_max
  Eigen::VectorXd energy_residuals;      // |T|^2 + |R|^2 - 1 per element
  double max_amplitude_excess = 0.0;     // max(|T|, |R|) beyond 1

  bool feasible(double sinr_rel_tol = 1e-4, double power_rel_tol = 1e-6,
                double energy_abs_tol = 1e-6, double amp_abs_tol = 1e-9) const {
    return primary_sinr_rel_margin >= -sinr_rel_tol &&
           power_rel_margin >= -power_rel_tol &&
           energy_residuals.cwiseAbs().maxCoeff() <= energy_abs_tol &&
           max_amplitude_excess <= amp_abs_tol;
  }
};

/// Composite channels with the surface response folded in:
/// z_t0 = h0^H + phi_t^T G0 and z_rk = h_k^H + phi_r^T G_k.
struct EffectiveChannels {
  Eigen::RowVectorXcd z_t0;
  std::vector<Eigen::RowVectorXcd> z_r;
};

EffectiveChannels effective_channels(const ChannelSet& ch, const StarRisProfile& prof);

double primary_sinr(const Beamformer& bf, const StarRisProfile& prof,
                    const ChannelSet& ch, const SystemConfig& cfg);

double secondary_sinr(int k, const Beamformer& bf, const StarRisProfile& prof,
                      const ChannelSet& ch, const SystemConfig& cfg);

/// sum_k B log2(1 + SINR_k), in bits/s.
double sum_rate(const Beamformer& bf, const StarRisProfile& prof, const ChannelSet& ch,
                const SystemConfig& cfg);

PerformanceMetrics evaluate_metrics(const Beamformer& bf, const StarRisProfile& prof,
                                    const ChannelSet& ch, const SystemConfig& cfg);

FeasibilityReport check_feasibility(const Beamformer& bf, const StarRisProfile& prof,
                                    const SystemConfig& cfg, const ChannelSet& ch);

/// Flat record; dB conversions happen only here.
nlohmann::json metrics_to_json(const PerformanceMetrics& m);

}  // namespace starshare
