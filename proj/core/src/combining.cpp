// SPDX-License-Identifier: Apache-2.0
#include "arraysim/combining.hpp"

#include <cmath>
#include <stdexcept>

#include "arraysim/errors.hpp"

namespace arraysim {

namespace {
// cond(Hhat^H Hhat) = (smax/smin)^2, so the 1e12 Gram threshold is a 1e6
// singular-value ratio.
constexpr double kMaxSingularValueRatio = 1e6;
} // namespace

CombinerMatrix zf_combiner(const Eigen::MatrixXcd &estimated_h) {
    const Eigen::Index m = estimated_h.rows();
    const Eigen::Index k = estimated_h.cols();
    if (k < 1)
        throw std::invalid_argument("zf_combiner: need at least one user column");
    if (m < k)
        throw std::invalid_argument("zf_combiner: K <= M required");

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(estimated_h,
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(k - 1);
    if (!(smin > smax / kMaxSingularValueRatio))
        throw DegenerateChannelError("zf_combiner: estimated channel Gram matrix condition "
                                     "number exceeds 1e12");

    CombinerMatrix combiner;
    combiner.matrix = svd.matrixU() * sv.cwiseInverse().asDiagonal() * svd.matrixV().adjoint();
    return combiner;
}

std::vector<double> sinr_per_user(const CombinerMatrix &combiner, const Eigen::MatrixXcd &true_h,
                                  double tx_power, double noise_power) {
    const Eigen::MatrixXcd &v = combiner.matrix;
    if (v.rows() != true_h.rows() || v.cols() != true_h.cols())
        throw std::invalid_argument("sinr_per_user: combiner / channel shape mismatch");
    if (!(tx_power > 0.0) || !(noise_power > 0.0))
        throw std::invalid_argument("sinr_per_user: powers must be positive");

    const Eigen::Index k = true_h.cols();
    const Eigen::MatrixXcd cross = v.adjoint() * true_h; // cross(k, k') = v_k^H h_k'
    std::vector<double> sinr(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) {
        const double desired = tx_power * std::norm(cross(i, i));
        const double interference = tx_power * (cross.row(i).squaredNorm() - std::norm(cross(i, i)));
        const double noise = noise_power * v.col(i).squaredNorm();
        sinr[static_cast<std::size_t>(i)] = desired / (interference + noise);
    }
    return sinr;
}

SeReport se_from_sinr_samples(const std::vector<std::vector<double>> &sinr_samples, int tau_p,
                              int tau_c) {
    if (sinr_samples.empty())
        throw std::invalid_argument("se_from_sinr_samples: no users");
    if (tau_p < 0 || tau_p >= tau_c)
        throw std::invalid_argument("se_from_sinr_samples: tau_p < tau_c required");

    SeReport report;
    report.frame_fraction =
        static_cast<double>(tau_c - tau_p) / static_cast<double>(tau_c);
    report.per_user_se.reserve(sinr_samples.size());
    double total = 0.0;
    for (const auto &samples : sinr_samples) {
        if (samples.empty())
            throw std::invalid_argument("se_from_sinr_samples: a user has no SINR samples");
        double acc = 0.0;
        for (const double gamma : samples)
            acc += std::log2(1.0 + gamma);
        const double se = report.frame_fraction * acc / static_cast<double>(samples.size());
        report.per_user_se.push_back(se);
        total += se;
    }
    report.mean_se = total / static_cast<double>(sinr_samples.size());
    return report;
}

} // namespace arraysim
