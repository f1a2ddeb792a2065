// SPDX-License-Identifier: Apache-2.0
#include "arraysim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "arraysim/errors.hpp"

namespace arraysim {

namespace {
constexpr double kDegenerateHorizontalDistance = 1e-9; // m
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

std::string_view to_string(ApType type) {
    switch (type) {
    case ApType::faa:
        return "FAA";
    case ApType::raa:
        return "RAA";
    case ApType::maa:
        return "MAA";
    case ApType::mraa:
        return "MRAA";
    }
    return "?";
}

std::optional<ApType> ap_type_from_string(std::string_view name) {
    if (name == "FAA")
        return ApType::faa;
    if (name == "RAA")
        return ApType::raa;
    if (name == "MAA")
        return ApType::maa;
    if (name == "MRAA")
        return ApType::mraa;
    return std::nullopt;
}

double wrap_angle(double angle) {
    double a = std::remainder(angle, kTwoPi);
    if (a <= -std::numbers::pi)
        a += kTwoPi;
    return a;
}

std::vector<Point2D> place_devices(int count, double area_side, Rng &rng) {
    if (count < 1)
        throw ConfigError("place_devices: count must be >= 1, got " + std::to_string(count));
    if (!(area_side > 0.0))
        throw ConfigError("place_devices: area_side must be > 0, got " +
                          std::to_string(area_side));
    std::uniform_real_distribution<double> coord(0.0, area_side);
    std::vector<Point2D> devices(static_cast<std::size_t>(count));
    for (auto &device : devices) {
        device.x = coord(rng);
        device.y = coord(rng);
    }
    return devices;
}

MovementBounds movement_bounds(double area_side, double movement_side) {
    if (!(movement_side >= 0.0))
        throw ConfigError("movement_bounds: movement_side must be >= 0");
    if (movement_side > area_side)
        throw ConfigError("movement_bounds: movement_side exceeds area_side");
    return MovementBounds{(area_side - movement_side) / 2.0, (area_side + movement_side) / 2.0};
}

GeometryView geometry_view(const ArrayPose &pose, const Point2D &device, double h_ap,
                           double h_device) {
    const double dx = device.x - pose.x;
    const double dy = device.y - pose.y;
    const double dz = h_ap - h_device;
    GeometryView view;
    view.distance = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (std::hypot(dx, dy) < kDegenerateHorizontalDistance) {
        view.azimuth = 0.0; // device directly below the array
        return view;
    }
    view.azimuth = wrap_angle(std::atan2(dy, dx) + pose.theta);
    return view;
}

double ula_length(int m_antennas, double carrier_hz) {
    if (m_antennas < 2)
        throw ConfigError("ula_length: need at least 2 antenna elements");
    if (!(carrier_hz > 0.0))
        throw ConfigError("ula_length: carrier_hz must be > 0");
    const double lambda = kSpeedOfLight / carrier_hz;
    return (m_antennas - 1) * lambda / 2.0;
}

double fraunhofer_distance(int m_antennas, double carrier_hz) {
    const double aperture = ula_length(m_antennas, carrier_hz);
    const double lambda = kSpeedOfLight / carrier_hz;
    return 2.0 * aperture * aperture / lambda;
}

double far_field_min_height(int m_antennas, double carrier_hz, double h_device) {
    return fraunhofer_distance(m_antennas, carrier_hz) + h_device;
}

} // namespace arraysim
