// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "arraysim/errors.hpp"
#include "arraysim/geometry.hpp"

using namespace arraysim;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("wrap_angle maps onto (-pi, pi]") {
    CHECK(wrap_angle(0.0) == doctest::Approx(0.0));
    CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
    CHECK(wrap_angle(2.0 * kPi) == doctest::Approx(0.0));
    CHECK(wrap_angle(-7.0 * kPi) == doctest::Approx(kPi));
}

TEST_CASE("place_devices draws inside the coverage area") {
    Rng rng = make_rng(42);
    const auto devices = place_devices(10, 100.0, rng);
    REQUIRE(devices.size() == 10);
    for (const auto &d : devices) {
        CHECK(d.x >= 0.0);
        CHECK(d.x <= 100.0);
        CHECK(d.y >= 0.0);
        CHECK(d.y <= 100.0);
    }
}

TEST_CASE("place_devices rejects degenerate input") {
    Rng rng = make_rng(1);
    CHECK_THROWS_AS(place_devices(1, 0.0, rng), ConfigError);
    CHECK_THROWS_AS(place_devices(0, 100.0, rng), ConfigError);
    CHECK_THROWS_AS(place_devices(-3, 100.0, rng), ConfigError);
}

TEST_CASE("place_devices empirical mean sits at the area center") {
    Rng rng = make_rng(7);
    const auto devices = place_devices(10000, 100.0, rng);
    double mx = 0.0;
    double my = 0.0;
    for (const auto &d : devices) {
        mx += d.x;
        my += d.y;
    }
    mx /= static_cast<double>(devices.size());
    my /= static_cast<double>(devices.size());
    CHECK(mx == doctest::Approx(50.0).epsilon(0.02));
    CHECK(my == doctest::Approx(50.0).epsilon(0.02));
    CHECK(std::abs(mx - 50.0) < 1.0);
    CHECK(std::abs(my - 50.0) < 1.0);
}

TEST_CASE("movement_bounds formula") {
    const auto half = movement_bounds(100.0, 50.0);
    CHECK(half.lower == doctest::Approx(25.0));
    CHECK(half.upper == doctest::Approx(75.0));

    const auto full = movement_bounds(100.0, 100.0);
    CHECK(full.lower == doctest::Approx(0.0));
    CHECK(full.upper == doctest::Approx(100.0));

    const auto fixed = movement_bounds(100.0, 0.0);
    CHECK(fixed.lower == doctest::Approx(50.0));
    CHECK(fixed.upper == doctest::Approx(50.0));
}

TEST_CASE("movement_bounds rejects invalid sides") {
    CHECK_THROWS_AS(movement_bounds(100.0, 150.0), ConfigError);
    CHECK_THROWS_AS(movement_bounds(100.0, -1.0), ConfigError);
}

TEST_CASE("movement_bounds is symmetric about the area center") {
    Rng rng = make_rng(3);
    std::uniform_real_distribution<double> area(1.0, 500.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double area_side = area(rng);
        const double movement_side = unit(rng) * area_side;
        const auto bounds = movement_bounds(area_side, movement_side);
        CHECK(bounds.lower + bounds.upper == doctest::Approx(area_side).epsilon(1e-12));
        CHECK(bounds.lower <= bounds.upper);
    }
}

TEST_CASE("geometry_view hand-checked example") {
    const ArrayPose pose{50.0, 50.0, 0.0};
    const Point2D device{50.0, 60.0};
    const auto view = geometry_view(pose, device, 12.0, 1.5);
    // sqrt(10^2 + 10.5^2) = sqrt(210.25)
    CHECK(view.distance == doctest::Approx(14.5).epsilon(1e-12));
    CHECK(view.azimuth == doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("geometry_view axis convention at theta 0") {
    const ArrayPose pose{50.0, 50.0, 0.0};
    CHECK(geometry_view(pose, {60.0, 50.0}, 12.0, 1.5).azimuth == doctest::Approx(0.0));
    CHECK(geometry_view(pose, {50.0, 60.0}, 12.0, 1.5).azimuth == doctest::Approx(kPi / 2.0));
    CHECK(geometry_view(pose, {40.0, 50.0}, 12.0, 1.5).azimuth == doctest::Approx(kPi));
    CHECK(geometry_view(pose, {50.0, 40.0}, 12.0, 1.5).azimuth == doctest::Approx(-kPi / 2.0));
}

TEST_CASE("geometry_view adds the rotation to the raw bearing") {
    const Point2D device{70.0, 55.0};
    const double raw = geometry_view({50.0, 50.0, 0.0}, device, 12.0, 1.5).azimuth;
    const double rotated = geometry_view({50.0, 50.0, 0.3}, device, 12.0, 1.5).azimuth;
    CHECK(rotated == doctest::Approx(wrap_angle(raw + 0.3)).epsilon(1e-12));
}

TEST_CASE("geometry_view distance is rotation invariant") {
    Rng rng = make_rng(11);
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int i = 0; i < 100; ++i) {
        const Point2D device{coord(rng), coord(rng)};
        const ArrayPose still{coord(rng), coord(rng), 0.0};
        const ArrayPose turned{still.x, still.y, angle(rng)};
        CHECK(geometry_view(still, device, 12.0, 1.5).distance ==
              geometry_view(turned, device, 12.0, 1.5).distance);
    }
}

TEST_CASE("geometry_view degenerate plan-view coincidence") {
    const ArrayPose pose{50.0, 50.0, 1.234};
    const auto view = geometry_view(pose, {50.0, 50.0}, 12.0, 1.5);
    CHECK(view.azimuth == 0.0);
    CHECK(view.distance == doctest::Approx(10.5));
    // distance never drops below the height difference
    CHECK(view.distance >= 12.0 - 1.5);
}

TEST_CASE("rotating by pi flips the sine of the azimuth") {
    const Point2D device{70.0, 63.0};
    const double base = geometry_view({50.0, 50.0, 0.0}, device, 12.0, 1.5).azimuth;
    const double flipped = geometry_view({50.0, 50.0, kPi}, device, 12.0, 1.5).azimuth;
    CHECK(std::sin(flipped) == doctest::Approx(-std::sin(base)).epsilon(1e-12));
}

TEST_CASE("far-field closed forms at the reference parameters") {
    CHECK(ula_length(16, 3.5e9) == doctest::Approx(0.64).epsilon(0.016));
    CHECK(std::abs(ula_length(16, 3.5e9) - 0.64) < 0.01);
    CHECK(std::abs(fraunhofer_distance(16, 3.5e9) - 9.64) < 0.01);
    CHECK(std::abs(far_field_min_height(16, 3.5e9, 1.5) - 11.14) < 0.01);
}

TEST_CASE("far_field_min_height two-element array reduces to lambda/2 + h") {
    const double lambda = kSpeedOfLight / 2.0e9;
    CHECK(far_field_min_height(2, 2.0e9, 3.0) == doctest::Approx(lambda / 2.0 + 3.0));
}

TEST_CASE("far_field_min_height monotonicity") {
    for (int m = 2; m < 64; ++m)
        CHECK(far_field_min_height(m + 1, 3.5e9, 1.5) > far_field_min_height(m, 3.5e9, 1.5));
    double previous = far_field_min_height(16, 1e9, 1.5);
    for (double f = 2e9; f <= 10e9; f += 1e9) {
        const double h = far_field_min_height(16, f, 1.5);
        CHECK(h < previous);
        previous = h;
    }
}

TEST_CASE("far-field functions validate input") {
    CHECK_THROWS_AS(ula_length(1, 3.5e9), ConfigError);
    CHECK_THROWS_AS(ula_length(16, 0.0), ConfigError);
}

TEST_CASE("ap type names round-trip") {
    for (const ApType type : {ApType::faa, ApType::raa, ApType::maa, ApType::mraa})
        CHECK(ap_type_from_string(to_string(type)) == type);
    CHECK(!ap_type_from_string("XAA").has_value());
}
