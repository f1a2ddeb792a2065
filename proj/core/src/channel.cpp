// SPDX-License-Identifier: Apache-2.0
#include "arraysim/channel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "arraysim/errors.hpp"
#include "arraysim/geometry.hpp"

namespace arraysim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_path_loss_params(const PathLossParams &params) {
    if (!(params.exponent > 0.0) || !(params.ref_distance > 0.0) || !(params.carrier_hz > 0.0))
        throw ConfigError("path loss parameters must be positive");
}

/// One standard circular complex normal draw: re/im each N(0, 1/2).
inline std::complex<double> draw_standard_cn(Rng &rng, std::normal_distribution<double> &comp) {
    const double re = comp(rng);
    const double im = comp(rng);
    return {re, im};
}

} // namespace

double path_loss_db(double distance, const PathLossParams &params, bool *clamped) {
    check_path_loss_params(params);
    double d = distance;
    if (d < params.ref_distance) {
        d = params.ref_distance;
        if (clamped != nullptr)
            *clamped = true;
    } else if (clamped != nullptr) {
        *clamped = false;
    }
    const double lambda = kSpeedOfLight / params.carrier_hz;
    const double l0_db = 20.0 * std::log10(4.0 * kPi * params.ref_distance / lambda);
    return -l0_db - 10.0 * params.exponent * std::log10(d / params.ref_distance);
}

double path_loss_linear(double distance, const PathLossParams &params, bool *clamped) {
    return std::pow(10.0, path_loss_db(distance, params, clamped) / 10.0);
}

Eigen::VectorXcd los_vector(double beta, double azimuth, const RicianParams &params) {
    if (beta < 0.0)
        throw std::invalid_argument("los_vector: beta must be >= 0");
    if (params.m_antennas < 1)
        throw std::invalid_argument("los_vector: m_antennas must be >= 1");
    const double amplitude = std::sqrt(beta);
    const double phase_step = -2.0 * kPi * params.spacing * std::sin(azimuth);
    Eigen::VectorXcd v(params.m_antennas);
    for (int m = 0; m < params.m_antennas; ++m)
        v(m) = std::polar(amplitude, phase_step * m);
    return v;
}

Covariance scattering_covariance(double beta, std::span<const double> nominal_azimuths,
                                 double asd, int m_antennas) {
    if (nominal_azimuths.empty())
        throw std::invalid_argument("scattering_covariance: need at least one cluster angle");
    if (m_antennas < 1)
        throw std::invalid_argument("scattering_covariance: m_antennas must be >= 1");
    if (beta < 0.0)
        throw std::invalid_argument("scattering_covariance: beta must be >= 0");

    const int m = m_antennas;
    const double scale = beta / static_cast<double>(nominal_azimuths.size());
    Eigen::MatrixXcd r(m, m);
    for (int s = 0; s < m; ++s) {
        r(s, s) = beta;
        for (int col = s + 1; col < m; ++col) {
            const double offset = kPi * static_cast<double>(s - col);
            std::complex<double> acc = 0.0;
            for (const double psi : nominal_azimuths) {
                const double spatial = offset * std::cos(psi);
                acc += std::polar(std::exp(-0.5 * asd * asd * spatial * spatial),
                                  offset * std::sin(psi));
            }
            r(s, col) = scale * acc;
            r(col, s) = std::conj(r(s, col));
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(r);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("scattering_covariance: eigendecomposition failed");
    const Eigen::VectorXd clamped = eig.eigenvalues().cwiseMax(0.0);

    Covariance cov;
    cov.beta = beta;
    cov.root = eig.eigenvectors() * clamped.cwiseSqrt().asDiagonal();
    if (eig.eigenvalues()(0) < 0.0) {
        // rebuild only when something was clamped; otherwise keep the exact
        // construction (diagonal identically beta)
        Eigen::MatrixXcd repaired = cov.root * cov.root.adjoint();
        cov.matrix = 0.5 * (repaired + repaired.adjoint());
    } else {
        cov.matrix = std::move(r);
    }
    return cov;
}

std::vector<double> draw_cluster_angles(double device_azimuth, const ScatteringParams &params,
                                        Rng &rng) {
    if (params.cluster_count < 1)
        throw std::invalid_argument("draw_cluster_angles: cluster_count must be >= 1");
    std::uniform_real_distribution<double> angle(device_azimuth - params.angle_halfwidth,
                                                 device_azimuth + params.angle_halfwidth);
    std::vector<double> angles(static_cast<std::size_t>(params.cluster_count));
    if (params.angle_halfwidth == 0.0) {
        for (auto &a : angles)
            a = device_azimuth;
        return angles;
    }
    for (auto &a : angles)
        a = angle(rng);
    return angles;
}

Eigen::VectorXcd sample_channel(const Eigen::VectorXcd &los, const Covariance &cov, double kappa,
                                Rng &rng) {
    if (kappa < 0.0)
        throw std::invalid_argument("sample_channel: kappa must be >= 0");
    const Eigen::Index m = los.size();
    if (cov.root.rows() != m || cov.root.cols() != m)
        throw std::invalid_argument("sample_channel: covariance / LoS size mismatch");

    std::normal_distribution<double> comp(0.0, std::sqrt(0.5));
    Eigen::VectorXcd z(m);
    for (Eigen::Index i = 0; i < m; ++i)
        z(i) = draw_standard_cn(rng, comp);

    const double los_scale = std::sqrt(kappa / (1.0 + kappa));
    const double nlos_scale = std::sqrt(1.0 / (1.0 + kappa));
    return los_scale * los + nlos_scale * (cov.root * z);
}

LinkBudget link_budget(const SystemConfig &config) {
    if (!(config.tx_power > 0.0) || !(config.noise_psd > 0.0) || !(config.bandwidth > 0.0))
        throw ConfigError("link_budget: tx_power, noise_psd and bandwidth must be positive");
    if (config.pilot_len < config.k_devices)
        throw ConfigError("tau_p = " + std::to_string(config.pilot_len) +
                          " violates tau_p >= K (k_devices = " +
                          std::to_string(config.k_devices) + ")");
    LinkBudget budget;
    budget.tx_power = config.tx_power;
    budget.noise_psd = config.noise_psd;
    budget.bandwidth = config.bandwidth;
    budget.noise_figure = config.noise_figure_linear();
    budget.noise_power = config.noise_psd * config.bandwidth * budget.noise_figure;
    budget.snr = config.tx_power / budget.noise_power;
    budget.pilot_len = config.pilot_len;
    budget.csi_var = 1.0 / (static_cast<double>(config.pilot_len) * budget.snr);
    return budget;
}

Eigen::MatrixXcd add_csi_error(const Eigen::MatrixXcd &true_h, double csi_var, Rng &rng) {
    if (csi_var < 0.0)
        throw std::invalid_argument("add_csi_error: csi_var must be >= 0");
    if (csi_var == 0.0)
        return true_h;
    std::normal_distribution<double> comp(0.0, std::sqrt(csi_var / 2.0));
    Eigen::MatrixXcd estimated = true_h;
    for (Eigen::Index c = 0; c < estimated.cols(); ++c)
        for (Eigen::Index r = 0; r < estimated.rows(); ++r)
            estimated(r, c) += draw_standard_cn(rng, comp);
    return estimated;
}

} // namespace arraysim
