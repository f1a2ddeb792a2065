// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "arraysim/channel.hpp"
#include "arraysim/combining.hpp"
#include "arraysim/experiment.hpp"
#include "arraysim/locopt.hpp"

namespace {

using namespace arraysim;

SystemConfig default_config() { return SystemConfig{}; }

void BM_ScatteringCovariance(benchmark::State &state) {
    const SystemConfig cfg = default_config();
    Rng rng = make_rng(11);
    const ScatteringParams scattering{cfg.cluster_count, cfg.cluster_halfwidth_rad(),
                                      cfg.asd_rad()};
    const auto angles = draw_cluster_angles(0.4, scattering, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            scattering_covariance(1e-8, angles, cfg.asd_rad(), cfg.m_antennas));
}
BENCHMARK(BM_ScatteringCovariance);

void BM_SampleChannel(benchmark::State &state) {
    const SystemConfig cfg = default_config();
    Rng rng = make_rng(12);
    const ScatteringParams scattering{cfg.cluster_count, cfg.cluster_halfwidth_rad(),
                                      cfg.asd_rad()};
    const auto angles = draw_cluster_angles(0.4, scattering, rng);
    const auto cov = scattering_covariance(1e-8, angles, cfg.asd_rad(), cfg.m_antennas);
    const auto los =
        los_vector(1e-8, 0.4, RicianParams{cfg.kappa_linear(), cfg.m_antennas, cfg.spacing});
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_channel(los, cov, cfg.kappa_linear(), rng));
}
BENCHMARK(BM_SampleChannel);

void BM_ZfSinr(benchmark::State &state) {
    const SystemConfig cfg = default_config();
    const NetworkRealization realization = draw_network_realization(cfg, 21);
    const ArrayPose pose{50.0, 50.0, 0.0};
    const auto pseudo = pseudo_channels(realization.estimates, pose, cfg);
    const LinkBudget budget = link_budget(cfg);
    for (auto _ : state) {
        const auto combiner = zf_combiner(pseudo);
        benchmark::DoNotOptimize(
            sinr_per_user(combiner, pseudo, budget.tx_power, budget.noise_power));
    }
}
BENCHMARK(BM_ZfSinr);

void BM_Objective(benchmark::State &state) {
    const SystemConfig cfg = default_config();
    const NetworkRealization realization = draw_network_realization(cfg, 22);
    const ObjectiveContext ctx{realization.estimates, &cfg,
                               movement_bounds(cfg.area_side, cfg.movement_side), ApType::raa};
    const double theta[] = {0.7};
    for (auto _ : state)
        benchmark::DoNotOptimize(objective(theta, ctx));
}
BENCHMARK(BM_Objective);

void BM_RunRealization(benchmark::State &state) {
    const SystemConfig cfg = default_config();
    const auto type = static_cast<ApType>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_realization(cfg, type, 31, 100));
}
BENCHMARK(BM_RunRealization)
    ->Arg(static_cast<int>(ApType::faa))
    ->Arg(static_cast<int>(ApType::raa))
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
