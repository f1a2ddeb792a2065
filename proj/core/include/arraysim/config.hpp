// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace arraysim {

/// All physical and protocol constants of one simulated deployment, with
/// defaults matching the reference indoor setup. Angles that users supply in
/// degrees and power ratios supplied in dB are stored as given and converted
/// through the accessors.
struct SystemConfig {
    int m_antennas = 16;           // M
    int k_devices = 10;            // K
    double area_side = 100.0;      // L_A, m
    double movement_side = 100.0;  // L_B, m
    double tx_power = 0.1;         // p, W
    double noise_psd = 4e-21;      // N0, W/Hz
    double bandwidth = 20e6;       // B, Hz
    double noise_figure_db = 9.0;  // N_F
    int pilot_len = 10;            // tau_p, symbols
    int slot_len = 200;            // tau_c, symbols
    double h_ap = 12.0;            // m
    double h_device = 1.5;         // m
    double carrier_hz = 3.5e9;     // f_c
    double spacing = 0.5;          // Delta, wavelengths
    double pathloss_exp = 2.0;     // eta
    double ref_distance = 1.0;     // d0, m
    double kappa_db = 10.0;        // Rician factor
    double sigma_e_sq_db = -10.0;  // localization error variance, dB rel. 1 m^2
    int cluster_count = 6;         // N
    double cluster_halfwidth_deg = 40.0;
    double asd_deg = 5.0;          // sigma_psi

    double kappa_linear() const;
    double sigma_e_sq() const; // m^2
    double noise_figure_linear() const;
    double cluster_halfwidth_rad() const;
    double asd_rad() const;

    /// Throws ConfigError on any violated invariant. Returns non-fatal
    /// warnings (currently: AP height below the far-field minimum).
    std::vector<std::string> validate() const;
};

} // namespace arraysim
