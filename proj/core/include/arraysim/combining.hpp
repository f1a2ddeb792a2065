// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

namespace arraysim {

/// Zero-forcing receive combiner V (M x K), V^H Hhat = I_K.
struct CombinerMatrix {
    Eigen::MatrixXcd matrix;
};

/// Per-user and mean achievable uplink spectral efficiency.
struct SeReport {
    std::vector<double> per_user_se; // R_k, bits/s/Hz
    double mean_se = 0.0;            // arithmetic mean over users
    double frame_fraction = 0.0;     // tau_d / tau_c
};

/// Computes V = Hhat (Hhat^H Hhat)^{-1} through an SVD; the explicit Gram
/// inversion is the contract, not the algorithm. Throws DegenerateChannelError
/// when cond(Hhat^H Hhat) exceeds 1e12.
CombinerMatrix zf_combiner(const Eigen::MatrixXcd &estimated_h);

/// Per-user SINR using the true channels and an estimate-derived combiner:
/// gamma_k = p |v_k^H h_k|^2 / (p sum_{k' != k} |v_k^H h_k'|^2 + sigma_n^2 ||v_k||^2).
std::vector<double> sinr_per_user(const CombinerMatrix &combiner, const Eigen::MatrixXcd &true_h,
                                  double tx_power, double noise_power);

/// R_k = (tau_d / tau_c) * mean over samples of log2(1 + gamma), with
/// tau_d = tau_c - tau_p; mean SE averages R_k over users.
/// `sinr_samples` is indexed [user][channel realization].
SeReport se_from_sinr_samples(const std::vector<std::vector<double>> &sinr_samples, int tau_p,
                              int tau_c);

} // namespace arraysim
