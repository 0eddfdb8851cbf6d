// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "starshare/config.hpp"
#include "starshare/rng.hpp"

namespace starshare {

/// One realization of every channel in the scenario. All vectors/matrices are
/// in linear amplitude units (pathloss already applied).
struct ChannelSet {
  Eigen::VectorXcd h0;                 // BS -> primary Rx, M
  std::vector<Eigen::VectorXcd> h;     // BS -> UE k, K x M
  Eigen::MatrixXcd H;                  // BS -> RIS, N x M (rank 1, LoS)
  Eigen::VectorXcd g0;                 // RIS -> primary Rx, N
  std::vector<Eigen::VectorXcd> g;     // RIS -> UE k, K x N
  Eigen::MatrixXcd G0;                 // cascaded BS-RIS-Rx, N x M
  std::vector<Eigen::MatrixXcd> G;     // cascaded BS-RIS-UE k, K x N x M
  std::vector<Vec3> ue_positions;      // K points, z = 0 plane
};

/// 3GPP-style close-in pathloss: 32.4 + 10 c log10(d) + 20 log10(f), d in
/// meters, f in GHz. Throws std::domain_error for nonpositive d or f.
double pathloss_db(double distance_m, double freq_ghz, double exponent);

/// Uniform linear array response. Entry n is
/// exp(j 2 pi spacing n sin(azimuth) cos(elevation)); entry 0 is always 1.
Eigen::VectorXcd array_response(int num_elements, double azimuth, double elevation,
                                double spacing_over_wavelength = 0.5);

/// Azimuth/elevation of the direction from `from` to `to`.
/// Throws std::domain_error when the points coincide.
std::pair<double, double> link_angles(const Vec3& from, const Vec3& to);

/// Rank-1 LoS channel between two arrays:
/// (gain / sqrt(PL)) a_rx(angles) a_tx(angles)^H.
Eigen::MatrixXcd los_channel_matrix(const Vec3& tx, const Vec3& rx, int num_tx,
                                    int num_rx, double freq_ghz, double exponent,
                                    std::complex<double> gain);

/// Single-sided LoS channel vector (gain / sqrt(PL)) a_tx(angles).
Eigen::VectorXcd los_channel_vector(const Vec3& tx, const Vec3& rx, int num_tx,
                                    double freq_ghz, double exponent,
                                    std::complex<double> gain);

/// BS -> RIS matrix with a fresh CN(0,1) gain.
Eigen::MatrixXcd synthesize_bs_ris_channel(const SystemConfig& cfg, Rng& rng);

/// Direct channel from a `num_elements` array at `from` toward `to`, fresh
/// CN(0,1) gain; used for h0, h_k and (from the RIS side) g0, g_k.
Eigen::VectorXcd synthesize_direct_channel(const SystemConfig& cfg, const Vec3& from,
                                           const Vec3& to, int num_elements,
                                           double exponent, Rng& rng);

/// (cascade_gain / sqrt(10^(pl_db/10))) diag(g^H) H.
Eigen::MatrixXcd synthesize_cascaded(const Eigen::VectorXcd& g, const Eigen::MatrixXcd& H,
                                     std::complex<double> cascade_gain, double cascade_pl_db);

/// K points uniform over the disk of radius `ue_sampling_radius_m` around the
/// RIS, in the z = 0 plane.
std::vector<Vec3> sample_ue_positions(const SystemConfig& cfg, Rng& rng);

/// Full channel realization; pure function of (cfg, rng state). When
/// `fixed_ue_positions` is given those positions are used instead of sampling
/// (the sampling draws are still consumed so gain draws stay aligned).
ChannelSet build_channel_set(const SystemConfig& cfg, Rng& rng,
                             const std::vector<Vec3>* fixed_ue_positions = nullptr);

}  // namespace starshare
