// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "arraysim/channel.hpp"
#include "arraysim/experiment.hpp"
#include "arraysim/locopt.hpp"

using namespace arraysim;

namespace {
constexpr double kPi = std::numbers::pi;

ObjectiveContext make_context(const SystemConfig &config,
                              std::vector<LocationEstimate> estimates, ApType dofs) {
    return ObjectiveContext{std::move(estimates), &config,
                            movement_bounds(config.area_side, config.movement_side), dofs};
}
} // namespace

TEST_CASE("perturb_locations with zero variance is the identity") {
    const std::vector<Point2D> truth{{1.0, 2.0}, {3.0, 4.0}};
    Rng rng = make_rng(3);
    const auto estimates = perturb_locations(truth, 0.0, rng);
    REQUIRE(estimates.size() == 2);
    CHECK(estimates[0].estimated.x == 1.0);
    CHECK(estimates[0].estimated.y == 2.0);
    CHECK(estimates[1].estimated.x == 3.0);
    CHECK(estimates[1].estimated.y == 4.0);
}

TEST_CASE("perturb_locations RMS planar error") {
    // sigma_e^2 = 0.1 m^2 (-10 dB): E||e||^2 = 2 sigma^2, RMS = 0.4472 m
    const double sigma_sq = 0.1;
    const std::vector<Point2D> truth{{50.0, 50.0}};
    Rng rng = make_rng(7);
    double sum_sq = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto est = perturb_locations(truth, sigma_sq, rng);
        const double ex = est[0].estimated.x - 50.0;
        const double ey = est[0].estimated.y - 50.0;
        sum_sq += ex * ex + ey * ey;
    }
    const double rms = std::sqrt(sum_sq / static_cast<double>(n));
    CHECK(rms == doctest::Approx(std::sqrt(2.0 * sigma_sq)).epsilon(0.02));
}

TEST_CASE("estimates are not clipped to the coverage area") {
    const std::vector<Point2D> truth{{0.0, 0.0}};
    Rng rng = make_rng(11);
    bool escaped = false;
    for (int i = 0; i < 200 && !escaped; ++i) {
        const auto est = perturb_locations(truth, 4.0, rng);
        escaped = est[0].estimated.x < 0.0 || est[0].estimated.y < 0.0;
    }
    CHECK(escaped);
}

TEST_CASE("pseudo channels equal the true LoS component without location error") {
    const SystemConfig config;
    const ArrayPose pose{40.0, 60.0, 0.9};
    const std::vector<Point2D> truth{{10.0, 20.0}, {80.0, 30.0}, {55.0, 90.0}};
    Rng rng = make_rng(13);
    const auto estimates = perturb_locations(truth, 0.0, rng);

    const Eigen::MatrixXcd pseudo = pseudo_channels(estimates, pose, config);
    REQUIRE(pseudo.rows() == config.m_antennas);
    REQUIRE(pseudo.cols() == 3);

    const PathLossParams path{config.pathloss_exp, config.ref_distance, config.carrier_hz};
    const RicianParams rician{config.kappa_linear(), config.m_antennas, config.spacing};
    for (int k = 0; k < 3; ++k) {
        const auto view = geometry_view(pose, truth[static_cast<std::size_t>(k)], config.h_ap,
                                        config.h_device);
        const auto expected =
            los_vector(path_loss_linear(view.distance, path), view.azimuth, rician);
        CHECK((pseudo.col(k) - expected).norm() == 0.0);
    }
}

TEST_CASE("mirror-symmetric estimates give conjugate pseudo columns") {
    const SystemConfig config;
    const ArrayPose pose{50.0, 50.0, 0.0};
    std::vector<LocationEstimate> estimates{{{70.0, 58.0}, 0.0}, {{70.0, 42.0}, 0.0}};
    const Eigen::MatrixXcd pseudo = pseudo_channels(estimates, pose, config);
    CHECK((pseudo.col(0) - pseudo.col(1).conjugate()).norm() < 1e-12 * pseudo.col(0).norm());
}

TEST_CASE("single-user objective is rotation invariant") {
    SystemConfig config;
    config.k_devices = 1;
    const auto ctx =
        make_context(config, {{Point2D{72.0, 61.0}, 0.0}}, ApType::raa);

    double lowest = std::numeric_limits<double>::infinity();
    double highest = -std::numeric_limits<double>::infinity();
    for (double theta = 0.0; theta <= kPi; theta += 0.01) {
        const double value = objective({&theta, 1}, ctx);
        lowest = std::min(lowest, value);
        highest = std::max(highest, value);
    }
    CHECK(highest - lowest <= 1e-9 * std::abs(highest));
}

TEST_CASE("rotary objective landscape is continuous and multimodal") {
    const SystemConfig config;
    const NetworkRealization realization = draw_network_realization(config, 1234);
    const auto ctx = make_context(config, realization.estimates, ApType::raa);

    std::vector<double> values;
    for (double theta = 0.0; theta <= kPi; theta += 0.005)
        values.push_back(objective({&theta, 1}, ctx));

    double lowest = values[0];
    double highest = values[0];
    for (const double v : values) {
        REQUIRE(std::isfinite(v));
        lowest = std::min(lowest, v);
        highest = std::max(highest, v);
    }
    CHECK(highest > lowest);

    int local_maxima = 0;
    double max_step = 0.0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] > values[i - 1] && values[i] > values[i + 1])
            ++local_maxima;
        max_step = std::max(max_step, std::abs(values[i] - values[i - 1]));
    }
    CHECK(local_maxima >= 2);
    CHECK(max_step < 0.25 * (highest - lowest));
}

TEST_CASE("coinciding estimated azimuths are rejected with -infinity") {
    SystemConfig config;
    config.k_devices = 2;
    const auto ctx = make_context(
        config, {{Point2D{70.0, 50.0}, 0.0}, {Point2D{70.0, 50.0}, 0.0}}, ApType::raa);
    const double theta = 0.3;
    CHECK(objective({&theta, 1}, ctx) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("objective is deterministic and permutation invariant") {
    const SystemConfig config;
    const NetworkRealization realization = draw_network_realization(config, 99);
    const auto ctx = make_context(config, realization.estimates, ApType::mraa);
    const std::vector<double> pose{42.0, 58.0, 1.1};

    const double first = objective(pose, ctx);
    const double second = objective(pose, ctx);
    CHECK(first == second); // bit-identical

    auto shuffled = realization.estimates;
    std::rotate(shuffled.begin(), shuffled.begin() + 3, shuffled.end());
    const auto ctx_shuffled = make_context(config, shuffled, ApType::mraa);
    CHECK(objective(pose, ctx_shuffled) == doctest::Approx(first).epsilon(1e-12));
}

TEST_CASE("pose_from_vector expands each dof set") {
    SystemConfig config;
    config.area_side = 100.0;
    const std::vector<LocationEstimate> estimates{{Point2D{1.0, 1.0}, 0.0}};

    const auto faa = make_context(config, estimates, ApType::faa);
    const ArrayPose fixed = pose_from_vector({}, faa);
    CHECK(fixed.x == 50.0);
    CHECK(fixed.y == 50.0);
    CHECK(fixed.theta == 0.0);

    const auto raa = make_context(config, estimates, ApType::raa);
    const double theta = 0.8;
    const ArrayPose rotated = pose_from_vector({&theta, 1}, raa);
    CHECK(rotated.x == 50.0);
    CHECK(rotated.theta == 0.8);

    const auto maa = make_context(config, estimates, ApType::maa);
    const std::vector<double> xy{30.0, 70.0};
    const ArrayPose moved = pose_from_vector(xy, maa);
    CHECK(moved.x == 30.0);
    CHECK(moved.y == 70.0);
    CHECK(moved.theta == 0.0);

    const auto mraa = make_context(config, estimates, ApType::mraa);
    const std::vector<double> xyt{30.0, 70.0, 2.0};
    const ArrayPose both = pose_from_vector(xyt, mraa);
    CHECK(both.theta == 2.0);

    CHECK(free_dimension_count(ApType::faa) == 0);
    CHECK(free_dimension_count(ApType::raa) == 1);
    CHECK(free_dimension_count(ApType::maa) == 2);
    CHECK(free_dimension_count(ApType::mraa) == 3);
    CHECK_THROWS_AS(pose_from_vector(xy, raa), std::invalid_argument);
}
