// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "arraysim/config.hpp"
#include "arraysim/geometry.hpp"
#include "arraysim/locopt.hpp"

namespace arraysim {

/// One network drop: true device locations, their estimates, and the fixed
/// nominal cluster angles drawn around each device's center-pose azimuth.
/// Everything here is shared across AP types for a given realization seed.
struct NetworkRealization {
    std::vector<Point2D> devices;
    std::vector<LocationEstimate> estimates;
    std::vector<std::vector<double>> cluster_angles; // [device][cluster]
};

enum class SweptParameter { kappa_db, movement_side, sigma_e_sq_db, area_side };

std::string_view to_string(SweptParameter parameter);
std::optional<SweptParameter> swept_parameter_from_string(std::string_view name);

/// A parameter sweep: every swept value is evaluated for every AP type over
/// the same set of paired network realizations.
struct SweepSpec {
    std::vector<ApType> ap_types{ApType::faa, ApType::raa, ApType::maa, ApType::mraa};
    SweptParameter swept = SweptParameter::kappa_db;
    std::vector<double> values;
    int n_network_realizations = 100;
    int n_channel_realizations = 100;
    std::uint64_t master_seed = 1;
    int workers = 1;

    void validate() const; // throws ConfigError
};

/// One output row of a sweep.
struct SweepRecord {
    SweptParameter swept = SweptParameter::kappa_db;
    double swept_value = 0.0;
    ApType ap_type = ApType::faa;
    int realization_index = 0;
    ArrayPose pose;
    double predicted_objective = 0.0; // bits/s/Hz, pure-LoS prediction
    double mean_se = 0.0;             // bits/s/Hz, Monte Carlo estimate
};

/// Grouped mean and standard error of mean_se per (swept value, AP type).
struct SummaryRow {
    SweptParameter swept = SweptParameter::kappa_db;
    double swept_value = 0.0;
    ApType ap_type = ApType::faa;
    double mean = 0.0;
    double std_error = 0.0;
    long n = 0;
};

/// Returns `base` with the swept parameter replaced by `value`.
SystemConfig apply_swept_parameter(SystemConfig base, SweptParameter parameter, double value);

/// Seed of one (value index, realization index) cell. Shared across AP types
/// so that device drops, cluster angles, localization errors and channel
/// noise are paired.
std::uint64_t realization_seed(std::uint64_t master_seed, int value_index,
                               int realization_index);

/// Draws the pose-independent part of a realization: device drop, cluster
/// angles around the center-pose azimuths, and location estimates.
NetworkRealization draw_network_realization(const SystemConfig &config, std::uint64_t seed);

/// Full pipeline for one realization: optimize the pose for the AP type (no
/// optimization for FAA or when the movement area is degenerate), then run
/// the Monte Carlo SE evaluation at the optimized pose. A channel realization
/// whose estimated matrix is ZF-degenerate is resampled up to 10 times before
/// the realization aborts with a runtime error.
SweepRecord run_realization(const SystemConfig &config, ApType ap_type, std::uint64_t seed,
                            int n_channel_realizations);

/// Same, with a caller-supplied network realization (shared-drop studies and
/// tests).
SweepRecord run_realization_with(const SystemConfig &config, ApType ap_type,
                                 const NetworkRealization &realization, std::uint64_t seed,
                                 int n_channel_realizations);

/// Runs the whole sweep. Records are ordered by value, then AP type (in spec
/// order), then realization index, independent of the worker count.
std::vector<SweepRecord> run_sweep(const SweepSpec &spec, const SystemConfig &base);

/// Grouped means and standard errors, sorted by swept value then AP type.
std::vector<SummaryRow> summarize(const std::vector<SweepRecord> &records);

} // namespace arraysim
