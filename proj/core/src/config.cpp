// SPDX-License-Identifier: Apache-2.0
#include "arraysim/config.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "arraysim/errors.hpp"
#include "arraysim/geometry.hpp"

namespace arraysim {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;

[[noreturn]] void fail(const std::string &message) { throw ConfigError(message); }

template <typename T> std::string show(const char *key, T value) {
    std::ostringstream oss;
    oss << key << " = " << value;
    return oss.str();
}
} // namespace

double SystemConfig::kappa_linear() const { return std::pow(10.0, kappa_db / 10.0); }

double SystemConfig::sigma_e_sq() const { return std::pow(10.0, sigma_e_sq_db / 10.0); }

double SystemConfig::noise_figure_linear() const { return std::pow(10.0, noise_figure_db / 10.0); }

double SystemConfig::cluster_halfwidth_rad() const { return cluster_halfwidth_deg * kDegToRad; }

double SystemConfig::asd_rad() const { return asd_deg * kDegToRad; }

std::vector<std::string> SystemConfig::validate() const {
    if (m_antennas < 1)
        fail(show("m_antennas", m_antennas) + " violates m_antennas >= 1");
    if (k_devices < 1)
        fail(show("k_devices", k_devices) + " violates k_devices >= 1");
    if (k_devices > m_antennas)
        fail(show("k_devices", k_devices) + " violates K <= M (m_antennas = " +
             std::to_string(m_antennas) + ")");
    if (!(area_side > 0.0))
        fail(show("area_side", area_side) + " violates area_side > 0");
    if (movement_side < 0.0)
        fail(show("movement_side", movement_side) + " violates movement_side >= 0");
    if (movement_side > area_side)
        fail(show("movement_side", movement_side) + " violates L_B <= L_A (area_side = " +
             std::to_string(area_side) + ")");
    if (!(tx_power > 0.0))
        fail(show("tx_power", tx_power) + " violates tx_power > 0");
    if (!(noise_psd > 0.0))
        fail(show("noise_psd", noise_psd) + " violates noise_psd > 0");
    if (!(bandwidth > 0.0))
        fail(show("bandwidth", bandwidth) + " violates bandwidth > 0");
    if (pilot_len < k_devices)
        fail(show("tau_p", pilot_len) + " violates tau_p >= K (k_devices = " +
             std::to_string(k_devices) + ")");
    if (slot_len <= pilot_len)
        fail(show("tau_c", slot_len) + " violates tau_c > tau_p (tau_p = " +
             std::to_string(pilot_len) + ")");
    if (!(h_ap > h_device))
        fail(show("h_ap", h_ap) + " violates h_ap > h_device (h_device = " +
             std::to_string(h_device) + ")");
    if (!(carrier_hz > 0.0))
        fail(show("carrier_hz", carrier_hz) + " violates carrier_hz > 0");
    if (!(spacing > 0.0))
        fail(show("spacing", spacing) + " violates spacing > 0");
    if (!(pathloss_exp > 0.0))
        fail(show("pathloss_exp", pathloss_exp) + " violates pathloss_exp > 0");
    if (!(ref_distance > 0.0))
        fail(show("ref_distance", ref_distance) + " violates ref_distance > 0");
    if (cluster_count < 1)
        fail(show("cluster_count", cluster_count) + " violates cluster_count >= 1");
    if (cluster_halfwidth_deg < 0.0)
        fail(show("cluster_halfwidth_deg", cluster_halfwidth_deg) +
             " violates cluster_halfwidth_deg >= 0");
    if (!(asd_deg > 0.0))
        fail(show("asd_deg", asd_deg) + " violates asd_deg > 0");

    std::vector<std::string> warnings;
    if (m_antennas >= 2) {
        const double h_min = far_field_min_height(m_antennas, carrier_hz, h_device);
        if (h_ap < h_min) {
            std::ostringstream oss;
            oss << "h_ap = " << h_ap << " m is below the far-field minimum height " << h_min
                << " m; devices near the AP may violate the far-field assumption";
            warnings.push_back(oss.str());
        }
    }
    return warnings;
}

} // namespace arraysim
