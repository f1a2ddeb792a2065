// SPDX-License-Identifier: Apache-2.0
#include "arraysim/experiment.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "arraysim/channel.hpp"
#include "arraysim/combining.hpp"
#include "arraysim/errors.hpp"
#include "arraysim/pso.hpp"

namespace arraysim {

namespace {

// Stream ids hung off each realization seed. The channel stream is split
// further per slot and retry attempt, so a resample never shifts the draws of
// the other slots.
enum StreamId : std::uint64_t {
    kDeviceStream = 1,
    kClusterStream = 2,
    kLocErrStream = 3,
    kPsoStream = 4,
    kChannelStream = 5,
};

constexpr int kMaxChannelRetries = 10;

/// Collapses degenerate movement bounds onto the remaining free variables, so
/// an MAA with a zero-size movement area runs the FAA pipeline and an MRAA
/// runs the RAA pipeline, seed for seed.
ApType effective_dofs(ApType ap_type, const MovementBounds &bounds) {
    const bool movable = bounds.upper > bounds.lower;
    switch (ap_type) {
    case ApType::faa:
        return ApType::faa;
    case ApType::raa:
        return ApType::raa;
    case ApType::maa:
        return movable ? ApType::maa : ApType::faa;
    case ApType::mraa:
        return movable ? ApType::mraa : ApType::raa;
    }
    return ApType::faa;
}

ArrayPose optimize_pose(const SystemConfig &config, const NetworkRealization &realization,
                        ApType dofs, const MovementBounds &bounds, std::uint64_t seed,
                        double *predicted) {
    ObjectiveContext ctx{realization.estimates, &config, bounds, dofs};

    if (dofs == ApType::faa) {
        *predicted = objective({}, ctx);
        return pose_from_vector({}, ctx);
    }

    std::vector<double> lower;
    std::vector<double> upper;
    if (dofs == ApType::maa || dofs == ApType::mraa) {
        lower.insert(lower.end(), {bounds.lower, bounds.lower});
        upper.insert(upper.end(), {bounds.upper, bounds.upper});
    }
    if (dofs == ApType::raa || dofs == ApType::mraa) {
        lower.push_back(0.0);
        upper.push_back(std::numbers::pi);
    }

    const PsoParams params = PsoParams::defaults(static_cast<int>(lower.size()));
    Rng rng = make_rng(
        derive_seed(seed, {kPsoStream, static_cast<std::uint64_t>(free_dimension_count(dofs))}));
    const PsoResult result = optimize(
        [&ctx](std::span<const double> v) { return objective(v, ctx); }, lower, upper, params,
        rng);
    *predicted = result.best_value;
    return pose_from_vector(result.best_position, ctx);
}

} // namespace

std::string_view to_string(SweptParameter parameter) {
    switch (parameter) {
    case SweptParameter::kappa_db:
        return "kappa_db";
    case SweptParameter::movement_side:
        return "movement_side";
    case SweptParameter::sigma_e_sq_db:
        return "sigma_e_sq_db";
    case SweptParameter::area_side:
        return "area_side";
    }
    return "?";
}

std::optional<SweptParameter> swept_parameter_from_string(std::string_view name) {
    if (name == "kappa_db")
        return SweptParameter::kappa_db;
    if (name == "movement_side")
        return SweptParameter::movement_side;
    if (name == "sigma_e_sq_db")
        return SweptParameter::sigma_e_sq_db;
    if (name == "area_side")
        return SweptParameter::area_side;
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (ap_types.empty())
        throw ConfigError("sweep: ap_types must not be empty");
    if (values.empty())
        throw ConfigError("sweep: sweep_values must not be empty");
    if (n_network_realizations < 1)
        throw ConfigError("sweep: network_realizations must be >= 1");
    if (n_channel_realizations < 1)
        throw ConfigError("sweep: channel_realizations must be >= 1");
    if (workers < 1)
        throw ConfigError("sweep: workers must be >= 1");
}

SystemConfig apply_swept_parameter(SystemConfig base, SweptParameter parameter, double value) {
    switch (parameter) {
    case SweptParameter::kappa_db:
        base.kappa_db = value;
        break;
    case SweptParameter::movement_side:
        base.movement_side = value;
        break;
    case SweptParameter::sigma_e_sq_db:
        base.sigma_e_sq_db = value;
        break;
    case SweptParameter::area_side:
        base.area_side = value;
        break;
    }
    return base;
}

std::uint64_t realization_seed(std::uint64_t master_seed, int value_index,
                               int realization_index) {
    return derive_seed(master_seed, {static_cast<std::uint64_t>(value_index),
                                     static_cast<std::uint64_t>(realization_index)});
}

NetworkRealization draw_network_realization(const SystemConfig &config, std::uint64_t seed) {
    NetworkRealization realization;
    {
        Rng rng = make_rng(derive_seed(seed, {kDeviceStream}));
        realization.devices = place_devices(config.k_devices, config.area_side, rng);
    }
    {
        Rng rng = make_rng(derive_seed(seed, {kClusterStream}));
        const double center = config.area_side / 2.0;
        const ArrayPose center_pose{center, center, 0.0};
        const ScatteringParams scattering{config.cluster_count, config.cluster_halfwidth_rad(),
                                          config.asd_rad()};
        realization.cluster_angles.reserve(realization.devices.size());
        for (const auto &device : realization.devices) {
            const double azimuth =
                geometry_view(center_pose, device, config.h_ap, config.h_device).azimuth;
            realization.cluster_angles.push_back(draw_cluster_angles(azimuth, scattering, rng));
        }
    }
    {
        Rng rng = make_rng(derive_seed(seed, {kLocErrStream}));
        realization.estimates = perturb_locations(realization.devices, config.sigma_e_sq(), rng);
    }
    return realization;
}

SweepRecord run_realization(const SystemConfig &config, ApType ap_type, std::uint64_t seed,
                            int n_channel_realizations) {
    return run_realization_with(config, ap_type, draw_network_realization(config, seed), seed,
                                n_channel_realizations);
}

SweepRecord run_realization_with(const SystemConfig &config, ApType ap_type,
                                 const NetworkRealization &realization, std::uint64_t seed,
                                 int n_channel_realizations) {
    if (n_channel_realizations < 1)
        throw ConfigError("run_realization: n_channel_realizations must be >= 1");
    if (realization.devices.size() != static_cast<std::size_t>(config.k_devices))
        throw std::invalid_argument("run_realization: realization does not match k_devices");

    const MovementBounds bounds = movement_bounds(config.area_side, config.movement_side);
    const ApType dofs = effective_dofs(ap_type, bounds);

    SweepRecord record;
    record.ap_type = ap_type;
    record.pose = optimize_pose(config, realization, dofs, bounds, seed,
                                &record.predicted_objective);

    // Monte Carlo SE at the optimized pose. Cluster angles stay as drawn for
    // the center pose; path gains and LoS azimuths follow the new geometry.
    const LinkBudget budget = link_budget(config);
    const PathLossParams path{config.pathloss_exp, config.ref_distance, config.carrier_hz};
    const RicianParams rician{config.kappa_linear(), config.m_antennas, config.spacing};
    const double kappa = config.kappa_linear();
    const int k = config.k_devices;

    std::vector<Eigen::VectorXcd> los(static_cast<std::size_t>(k));
    std::vector<Covariance> cov(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const GeometryView view =
            geometry_view(record.pose, realization.devices[i], config.h_ap, config.h_device);
        const double beta = path_loss_linear(view.distance, path);
        los[i] = los_vector(beta, view.azimuth, rician);
        cov[i] = scattering_covariance(beta, realization.cluster_angles[i], config.asd_rad(),
                                       config.m_antennas);
    }

    std::vector<std::vector<double>> sinr_samples(static_cast<std::size_t>(k));
    for (auto &samples : sinr_samples)
        samples.reserve(static_cast<std::size_t>(n_channel_realizations));

    for (int slot = 0; slot < n_channel_realizations; ++slot) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > kMaxChannelRetries)
                throw std::runtime_error(
                    "run_realization: exhausted degenerate-channel retries in slot " +
                    std::to_string(slot));
            Rng rng = make_rng(derive_seed(seed, {kChannelStream,
                                                  static_cast<std::uint64_t>(slot),
                                                  static_cast<std::uint64_t>(attempt)}));
            ChannelSet slot_channels;
            slot_channels.true_h.resize(config.m_antennas, k);
            for (int i = 0; i < k; ++i)
                slot_channels.true_h.col(i) = sample_channel(los[i], cov[i], kappa, rng);
            slot_channels.estimated_h = add_csi_error(slot_channels.true_h, budget.csi_var, rng);

            CombinerMatrix combiner;
            try {
                combiner = zf_combiner(slot_channels.estimated_h);
            } catch (const DegenerateChannelError &) {
                continue;
            }
            const std::vector<double> sinr = sinr_per_user(combiner, slot_channels.true_h,
                                                           budget.tx_power, budget.noise_power);
            for (int i = 0; i < k; ++i)
                sinr_samples[static_cast<std::size_t>(i)].push_back(
                    sinr[static_cast<std::size_t>(i)]);
            break;
        }
    }

    record.mean_se =
        se_from_sinr_samples(sinr_samples, config.pilot_len, config.slot_len).mean_se;
    return record;
}

std::vector<SweepRecord> run_sweep(const SweepSpec &spec, const SystemConfig &base) {
    spec.validate();

    std::vector<SystemConfig> configs;
    configs.reserve(spec.values.size());
    for (const double value : spec.values) {
        SystemConfig config = apply_swept_parameter(base, spec.swept, value);
        config.validate();
        configs.push_back(config);
    }

    const std::size_t n_values = spec.values.size();
    const std::size_t n_types = spec.ap_types.size();
    const std::size_t n_real = static_cast<std::size_t>(spec.n_network_realizations);
    const std::size_t total = n_values * n_types * n_real;
    std::vector<SweepRecord> records(total);

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= total)
                return;
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure)
                    return;
            }
            const std::size_t vi = index / (n_types * n_real);
            const std::size_t ti = (index / n_real) % n_types;
            const std::size_t ri = index % n_real;
            try {
                SweepRecord record = run_realization(
                    configs[vi], spec.ap_types[ti],
                    realization_seed(spec.master_seed, static_cast<int>(vi),
                                     static_cast<int>(ri)),
                    spec.n_channel_realizations);
                record.swept = spec.swept;
                record.swept_value = spec.values[vi];
                record.realization_index = static_cast<int>(ri);
                records[index] = std::move(record);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };

    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(spec.workers), std::max<std::size_t>(total, 1));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i)
            threads.emplace_back(worker);
        for (auto &thread : threads)
            thread.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<SweepRecord> &records) {
    if (records.empty())
        throw std::invalid_argument("summarize: no records");

    std::map<std::tuple<int, double, int>, std::vector<double>> groups;
    for (const auto &record : records)
        groups[{static_cast<int>(record.swept), record.swept_value,
                static_cast<int>(record.ap_type)}]
            .push_back(record.mean_se);

    std::vector<SummaryRow> rows;
    rows.reserve(groups.size());
    for (const auto &[key, values] : groups) {
        SummaryRow row;
        row.swept = static_cast<SweptParameter>(std::get<0>(key));
        row.swept_value = std::get<1>(key);
        row.ap_type = static_cast<ApType>(std::get<2>(key));
        row.n = static_cast<long>(values.size());
        double mean = 0.0;
        for (const double v : values)
            mean += v;
        mean /= static_cast<double>(values.size());
        row.mean = mean;
        if (values.size() > 1) {
            double ss = 0.0;
            for (const double v : values)
                ss += (v - mean) * (v - mean);
            const double sample_var = ss / static_cast<double>(values.size() - 1);
            row.std_error = std::sqrt(sample_var / static_cast<double>(values.size()));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace arraysim
