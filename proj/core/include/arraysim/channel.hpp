// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "arraysim/config.hpp"
#include "arraysim/rng.hpp"

namespace arraysim {

/// Log-distance path loss with a Friis free-space reference attenuation.
struct PathLossParams {
    double exponent = 2.0;     // eta
    double ref_distance = 1.0; // d0, m
    double carrier_hz = 3.5e9; // f_c
};

/// Gaussian local scattering around each device's nominal azimuth.
struct ScatteringParams {
    int cluster_count = 6;          // N
    double angle_halfwidth = 0.0;   // rad; clusters drawn uniform in +-halfwidth
    double asd = 0.0;               // sigma_psi, rad
};

struct RicianParams {
    double kappa = 0.0;  // linear power ratio of LoS to NLoS
    int m_antennas = 16; // M
    double spacing = 0.5; // Delta, wavelengths
};

/// NLoS spatial covariance of one device, PSD-repaired. `root` satisfies
/// root * root^H = matrix and is what the sampler multiplies noise with.
struct Covariance {
    Eigen::MatrixXcd matrix;
    Eigen::MatrixXcd root;
    double beta = 0.0;
};

/// True and pilot-estimated channel matrices for one coherence slot (M x K).
struct ChannelSet {
    Eigen::MatrixXcd true_h;
    Eigen::MatrixXcd estimated_h;
};

/// Derived link quantities shared by all devices.
struct LinkBudget {
    double tx_power = 0.0;     // p, W
    double noise_power = 0.0;  // sigma_n^2, W
    double snr = 0.0;          // rho = p / sigma_n^2
    double csi_var = 0.0;      // sigma_csi^2 = 1 / (tau_p * rho)
    double noise_psd = 0.0;    // N0, W/Hz
    double bandwidth = 0.0;    // B, Hz
    double noise_figure = 0.0; // N_F, linear
    int pilot_len = 0;         // tau_p
};

/// Distance-dependent power attenuation in dB. Distances below the reference
/// distance are clamped to it; `clamped` (optional) reports that.
double path_loss_db(double distance, const PathLossParams &params, bool *clamped = nullptr);

/// Same attenuation as a linear power gain beta.
double path_loss_linear(double distance, const PathLossParams &params, bool *clamped = nullptr);

/// Deterministic LoS steering vector: element m is
/// sqrt(beta) * exp(-j 2 pi m Delta sin(azimuth)), m = 0..M-1.
Eigen::VectorXcd los_vector(double beta, double azimuth, const RicianParams &params);

/// NLoS spatial covariance from the Gaussian local scattering model with the
/// given nominal cluster angles, half-wavelength element spacing implied.
/// Tiny negative eigenvalues from rounding are clamped to zero.
Covariance scattering_covariance(double beta, std::span<const double> nominal_azimuths,
                                 double asd, int m_antennas);

/// N i.i.d. cluster angles uniform on device_azimuth +- angle_halfwidth.
std::vector<double> draw_cluster_angles(double device_azimuth, const ScatteringParams &params,
                                        Rng &rng);

/// One correlated Rician draw:
/// sqrt(kappa/(1+kappa)) * los + sqrt(1/(1+kappa)) * root * z,
/// z i.i.d. standard circular complex normal. Always consumes the same amount
/// of randomness for a given M, so paired streams stay aligned.
Eigen::VectorXcd sample_channel(const Eigen::VectorXcd &los, const Covariance &cov, double kappa,
                                Rng &rng);

/// Noise power, transmit SNR and CSI error variance from the config.
LinkBudget link_budget(const SystemConfig &config);

/// Adds i.i.d. circular complex Gaussian estimation error of the given
/// per-entry variance to every entry. csi_var == 0 returns the input exactly.
Eigen::MatrixXcd add_csi_error(const Eigen::MatrixXcd &true_h, double csi_var, Rng &rng);

} // namespace arraysim
