// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "arraysim/config.hpp"
#include "arraysim/geometry.hpp"
#include "arraysim/rng.hpp"

namespace arraysim {

/// An estimated device location together with the variance of the planar
/// Gaussian error that produced it.
struct LocationEstimate {
    Point2D estimated;
    double error_variance = 0.0; // sigma_e^2, m^2
};

/// Everything the pose objective needs besides the candidate pose itself.
/// `pose_dofs` selects which of (x, y, theta) the pose vector carries; the
/// remaining components stay at the center pose (L_A/2, L_A/2, 0).
struct ObjectiveContext {
    std::vector<LocationEstimate> estimates;
    const SystemConfig *config = nullptr;
    MovementBounds bounds;
    ApType pose_dofs = ApType::faa;
};

/// Number of free pose variables: FAA 0, RAA 1, MAA 2, MRAA 3.
int free_dimension_count(ApType pose_dofs);

/// Expands a packed free-variable vector into a full pose.
/// RAA: [theta]; MAA: [x, y]; MRAA: [x, y, theta]; FAA: empty.
ArrayPose pose_from_vector(std::span<const double> pose_vector, const ObjectiveContext &ctx);

/// Perturbs each true location by independent N(0, sigma_e_sq) per axis.
/// Estimates are deliberately not clipped to the coverage area.
std::vector<LocationEstimate> perturb_locations(std::span<const Point2D> truth, double sigma_e_sq,
                                                Rng &rng);

/// Pure-LoS pseudo channel matrix (M x K) at a candidate pose: column k is
/// the LoS steering vector for the estimated location of device k, with the
/// path gain predicted from the estimated 3-D distance.
Eigen::MatrixXcd pseudo_channels(std::span<const LocationEstimate> estimates,
                                 const ArrayPose &pose, const SystemConfig &config);

/// Predicted mean per-user SE at a candidate pose, assuming pure LoS
/// propagation: ZF combiner and SINR are both evaluated on the pseudo
/// channels. Deterministic. Returns -infinity when the pseudo channels are
/// too ill-conditioned for ZF (pose rejected).
double objective(std::span<const double> pose_vector, const ObjectiveContext &ctx);

} // namespace arraysim
