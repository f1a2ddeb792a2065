// SPDX-License-Identifier: Apache-2.0
#include "arraysim/locopt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "arraysim/channel.hpp"
#include "arraysim/combining.hpp"
#include "arraysim/errors.hpp"

namespace arraysim {

int free_dimension_count(ApType pose_dofs) {
    switch (pose_dofs) {
    case ApType::faa:
        return 0;
    case ApType::raa:
        return 1;
    case ApType::maa:
        return 2;
    case ApType::mraa:
        return 3;
    }
    return 0;
}

ArrayPose pose_from_vector(std::span<const double> pose_vector, const ObjectiveContext &ctx) {
    if (ctx.config == nullptr)
        throw std::invalid_argument("pose_from_vector: context has no config");
    if (static_cast<int>(pose_vector.size()) != free_dimension_count(ctx.pose_dofs))
        throw std::invalid_argument("pose_from_vector: vector size does not match pose dofs");

    const double center = ctx.config->area_side / 2.0;
    ArrayPose pose{center, center, 0.0};
    switch (ctx.pose_dofs) {
    case ApType::faa:
        break;
    case ApType::raa:
        pose.theta = pose_vector[0];
        break;
    case ApType::maa:
        pose.x = pose_vector[0];
        pose.y = pose_vector[1];
        break;
    case ApType::mraa:
        pose.x = pose_vector[0];
        pose.y = pose_vector[1];
        pose.theta = pose_vector[2];
        break;
    }
    return pose;
}

std::vector<LocationEstimate> perturb_locations(std::span<const Point2D> truth, double sigma_e_sq,
                                                Rng &rng) {
    if (sigma_e_sq < 0.0)
        throw std::invalid_argument("perturb_locations: sigma_e_sq must be >= 0");
    std::vector<LocationEstimate> estimates;
    estimates.reserve(truth.size());
    if (sigma_e_sq == 0.0) {
        for (const auto &p : truth)
            estimates.push_back({p, 0.0});
        return estimates;
    }
    std::normal_distribution<double> err(0.0, std::sqrt(sigma_e_sq));
    for (const auto &p : truth) {
        LocationEstimate est;
        est.error_variance = sigma_e_sq;
        est.estimated.x = p.x + err(rng);
        est.estimated.y = p.y + err(rng);
        estimates.push_back(est);
    }
    return estimates;
}

Eigen::MatrixXcd pseudo_channels(std::span<const LocationEstimate> estimates,
                                 const ArrayPose &pose, const SystemConfig &config) {
    const PathLossParams path{config.pathloss_exp, config.ref_distance, config.carrier_hz};
    const RicianParams rician{config.kappa_linear(), config.m_antennas, config.spacing};
    Eigen::MatrixXcd pseudo(config.m_antennas, static_cast<Eigen::Index>(estimates.size()));
    for (std::size_t k = 0; k < estimates.size(); ++k) {
        const GeometryView view =
            geometry_view(pose, estimates[k].estimated, config.h_ap, config.h_device);
        const double beta = path_loss_linear(view.distance, path);
        pseudo.col(static_cast<Eigen::Index>(k)) = los_vector(beta, view.azimuth, rician);
    }
    return pseudo;
}

double objective(std::span<const double> pose_vector, const ObjectiveContext &ctx) {
    if (ctx.config == nullptr)
        throw std::invalid_argument("objective: context has no config");
    if (ctx.estimates.empty())
        throw std::invalid_argument("objective: context has no location estimates");

    const ArrayPose pose = pose_from_vector(pose_vector, ctx);
    const Eigen::MatrixXcd pseudo = pseudo_channels(ctx.estimates, pose, *ctx.config);

    CombinerMatrix combiner;
    try {
        combiner = zf_combiner(pseudo);
    } catch (const DegenerateChannelError &) {
        return -std::numeric_limits<double>::infinity();
    }

    const LinkBudget budget = link_budget(*ctx.config);
    const std::vector<double> sinr =
        sinr_per_user(combiner, pseudo, budget.tx_power, budget.noise_power);

    std::vector<std::vector<double>> samples(sinr.size());
    for (std::size_t k = 0; k < sinr.size(); ++k)
        samples[k] = {sinr[k]};
    return se_from_sinr_samples(samples, ctx.config->pilot_len, ctx.config->slot_len).mean_se;
}

} // namespace arraysim
