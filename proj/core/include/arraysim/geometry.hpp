// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "arraysim/rng.hpp"

namespace arraysim {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Planar coordinates in meters.
struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

/// Position and rotation of the ULA center. theta in radians, [0, pi].
struct ArrayPose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
};

/// Per-axis movement interval of the array center, inscribed in the coverage
/// area: [lower, upper] in meters, identical for x and y.
struct MovementBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// A device as seen from a pose: 3-D distance (includes the AP/device height
/// difference) and horizontal-plane azimuth relative to the rotated array.
struct GeometryView {
    double distance = 0.0; // meters
    double azimuth = 0.0;  // radians, wrapped to (-pi, pi]
};

/// Antenna-array drive: fixed, rotary, movable, or movable-and-rotary. Also
/// names the set of free pose variables: none / theta / xy / xy+theta.
enum class ApType { faa, raa, maa, mraa };

std::string_view to_string(ApType type);
std::optional<ApType> ap_type_from_string(std::string_view name);

/// Wraps an angle to (-pi, pi].
double wrap_angle(double angle);

/// Draws `count` device locations with coordinates i.i.d. uniform on
/// [0, area_side].
std::vector<Point2D> place_devices(int count, double area_side, Rng &rng);

/// Movement interval of a movement square with side `movement_side` centered
/// in a coverage square with side `area_side`:
/// ((area - movement)/2, (area + movement)/2).
MovementBounds movement_bounds(double area_side, double movement_side);

/// Distance and azimuth of `device` from `pose`. Boresight at theta = 0
/// points along +x; azimuth grows counter-clockwise and the rotation is added
/// on top of the raw bearing (phi' = phi + theta). A device in plan-view
/// coincidence with the pose (horizontal distance < 1e-9 m) gets azimuth 0.
GeometryView geometry_view(const ArrayPose &pose, const Point2D &device, double h_ap,
                           double h_device);

/// Physical aperture of a ULA of `m_antennas` half-wavelength-spaced elements.
double ula_length(int m_antennas, double carrier_hz);

/// Fraunhofer near/far-field threshold 2 D^2 / lambda for the same ULA.
double fraunhofer_distance(int m_antennas, double carrier_hz);

/// Minimum AP height that keeps even a device directly below the array in the
/// far field: fraunhofer_distance + h_device.
double far_field_min_height(int m_antennas, double carrier_hz, double h_device);

} // namespace arraysim
