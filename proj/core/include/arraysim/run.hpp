// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arraysim/experiment.hpp"

namespace arraysim {

enum class Preset { fig6, fig7, fig8, fig9 };

std::string_view to_string(Preset preset);
std::optional<Preset> preset_from_string(std::string_view name);

/// Result of parsing a flat key = value config document. `sweep_specified`
/// is true iff at least one sweep key appeared.
struct ParsedConfig {
    SystemConfig system;
    SweepSpec sweep;
    bool sweep_specified = false;
};

/// Parses a flat key = value document ('#' starts a comment). Unknown keys
/// and unparsable values throw ConfigError naming the key. Omitted keys keep
/// their defaults; cross-field invariants are checked by validate() later.
ParsedConfig parse_config(std::string_view text);

/// Applies one key = value override using the same key set as parse_config.
void apply_override(ParsedConfig &parsed, std::string_view key, std::string_view value);

/// Installs a preset's sweep grid (and, for fig9, a movement area that fits
/// the smallest swept coverage area); the grids approximate the reference
/// result figures.
void apply_preset(Preset preset, SystemConfig &system, SweepSpec &sweep);

/// A fully specified batch run.
struct RunManifest {
    std::string config_path;                                   // empty: no file
    std::optional<Preset> preset;
    std::vector<std::pair<std::string, std::string>> overrides; // --set key=value
    std::string output_path = "records.csv";
    std::uint64_t seed = 1;
    int workers = 1;
};

/// Path of the summary CSV next to the records CSV.
std::string summary_path(const std::string &records_path);

/// Executes the manifest: parse, sweep, write records and summary CSVs, print
/// one summary line per (value, AP type). Returns the process exit code:
/// 0 success, 1 runtime failure, 2 configuration error.
int run(const RunManifest &manifest, std::ostream &out, std::ostream &err);

/// Full command-line front end (flags: --config, --preset, --set, --out,
/// --seed, --workers; env ARRAYSIM_SEED as seed fallback).
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace arraysim
