// SPDX-License-Identifier: Apache-2.0
#include "arraysim/run.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arraysim/csv.hpp"
#include "arraysim/errors.hpp"

namespace arraysim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw ConfigError("key '" + std::string(key) + "': cannot parse value '" +
                      std::string(value) + "'");
}

int parse_int(std::string_view key, std::string_view value) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        bad_value(key, value);
    return out;
}

double parse_double(std::string_view key, std::string_view value) {
    const std::string buffer(value);
    std::size_t pos = 0;
    double out = 0.0;
    try {
        out = std::stod(buffer, &pos);
    } catch (const std::exception &) {
        bad_value(key, value);
    }
    if (pos != buffer.size())
        bad_value(key, value);
    return out;
}

std::vector<std::string_view> split_list(std::string_view value) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto end = comma == std::string_view::npos ? value.size() : comma;
        items.push_back(trim(value.substr(start, end - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return items;
}

std::vector<double> parse_double_list(std::string_view key, std::string_view value) {
    std::vector<double> out;
    for (const auto item : split_list(value)) {
        if (item.empty())
            bad_value(key, value);
        out.push_back(parse_double(key, item));
    }
    if (out.empty())
        bad_value(key, value);
    return out;
}

std::vector<ApType> parse_ap_types(std::string_view key, std::string_view value) {
    std::vector<ApType> out;
    for (const auto item : split_list(value)) {
        const auto type = ap_type_from_string(item);
        if (!type)
            throw ConfigError("key '" + std::string(key) + "': unknown AP type '" +
                              std::string(item) + "' (expected FAA, RAA, MAA or MRAA)");
        out.push_back(*type);
    }
    if (out.empty())
        bad_value(key, value);
    return out;
}

void apply_key(ParsedConfig &parsed, std::string_view key, std::string_view value) {
    SystemConfig &sys = parsed.system;
    SweepSpec &sweep = parsed.sweep;

    if (key == "m_antennas")
        sys.m_antennas = parse_int(key, value);
    else if (key == "k_devices")
        sys.k_devices = parse_int(key, value);
    else if (key == "area_side")
        sys.area_side = parse_double(key, value);
    else if (key == "movement_side")
        sys.movement_side = parse_double(key, value);
    else if (key == "tx_power")
        sys.tx_power = parse_double(key, value);
    else if (key == "noise_psd")
        sys.noise_psd = parse_double(key, value);
    else if (key == "bandwidth")
        sys.bandwidth = parse_double(key, value);
    else if (key == "noise_figure_db")
        sys.noise_figure_db = parse_double(key, value);
    else if (key == "tau_p")
        sys.pilot_len = parse_int(key, value);
    else if (key == "tau_c")
        sys.slot_len = parse_int(key, value);
    else if (key == "h_ap")
        sys.h_ap = parse_double(key, value);
    else if (key == "h_device")
        sys.h_device = parse_double(key, value);
    else if (key == "carrier_hz")
        sys.carrier_hz = parse_double(key, value);
    else if (key == "spacing")
        sys.spacing = parse_double(key, value);
    else if (key == "pathloss_exp")
        sys.pathloss_exp = parse_double(key, value);
    else if (key == "ref_distance")
        sys.ref_distance = parse_double(key, value);
    else if (key == "kappa_db")
        sys.kappa_db = parse_double(key, value);
    else if (key == "sigma_e_sq_db")
        sys.sigma_e_sq_db = parse_double(key, value);
    else if (key == "cluster_count")
        sys.cluster_count = parse_int(key, value);
    else if (key == "cluster_halfwidth_deg")
        sys.cluster_halfwidth_deg = parse_double(key, value);
    else if (key == "asd_deg")
        sys.asd_deg = parse_double(key, value);
    else if (key == "sweep_parameter") {
        const auto parameter = swept_parameter_from_string(value);
        if (!parameter)
            throw ConfigError("key 'sweep_parameter': unknown parameter '" + std::string(value) +
                              "' (expected kappa_db, movement_side, sigma_e_sq_db or area_side)");
        sweep.swept = *parameter;
        parsed.sweep_specified = true;
    } else if (key == "sweep_values") {
        sweep.values = parse_double_list(key, value);
        parsed.sweep_specified = true;
    } else if (key == "ap_types") {
        sweep.ap_types = parse_ap_types(key, value);
        parsed.sweep_specified = true;
    } else if (key == "network_realizations") {
        sweep.n_network_realizations = parse_int(key, value);
        parsed.sweep_specified = true;
    } else if (key == "channel_realizations") {
        sweep.n_channel_realizations = parse_int(key, value);
        parsed.sweep_specified = true;
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "'");
    }
}

} // namespace

std::string_view to_string(Preset preset) {
    switch (preset) {
    case Preset::fig6:
        return "fig6";
    case Preset::fig7:
        return "fig7";
    case Preset::fig8:
        return "fig8";
    case Preset::fig9:
        return "fig9";
    }
    return "?";
}

std::optional<Preset> preset_from_string(std::string_view name) {
    if (name == "fig6")
        return Preset::fig6;
    if (name == "fig7")
        return Preset::fig7;
    if (name == "fig8")
        return Preset::fig8;
    if (name == "fig9")
        return Preset::fig9;
    return std::nullopt;
}

ParsedConfig parse_config(std::string_view text) {
    ParsedConfig parsed;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto newline = text.find('\n', start);
        const auto end = newline == std::string_view::npos ? text.size() : newline;
        std::string_view line = text.substr(start, end - start);
        ++line_number;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_number) +
                                  ": expected 'key = value'");
            const auto key = trim(line.substr(0, eq));
            const auto value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError("line " + std::to_string(line_number) + ": missing key");
            apply_key(parsed, key, value);
        }

        if (newline == std::string_view::npos)
            break;
        start = newline + 1;
    }
    return parsed;
}

void apply_override(ParsedConfig &parsed, std::string_view key, std::string_view value) {
    apply_key(parsed, trim(key), trim(value));
}

void apply_preset(Preset preset, SystemConfig &system, SweepSpec &sweep) {
    sweep.ap_types = {ApType::faa, ApType::raa, ApType::maa, ApType::mraa};
    switch (preset) {
    case Preset::fig6:
        sweep.swept = SweptParameter::kappa_db;
        sweep.values = {0.0, 5.0, 10.0, 15.0, 20.0};
        break;
    case Preset::fig7:
        sweep.swept = SweptParameter::movement_side;
        sweep.values = {0.1, 1.0, 2.5, 5.0, 10.0, 25.0, 50.0, 100.0};
        break;
    case Preset::fig8:
        sweep.swept = SweptParameter::sigma_e_sq_db;
        sweep.values = {-30.0, -20.0, -10.0, 0.0, 10.0, 20.0};
        break;
    case Preset::fig9:
        sweep.swept = SweptParameter::area_side;
        sweep.values = {50.0, 75.0, 100.0, 125.0, 150.0};
        // keep the movement area inside the smallest swept coverage area
        system.movement_side = 25.0;
        break;
    }
}

std::string summary_path(const std::string &records_path) {
    constexpr std::string_view ext = ".csv";
    if (records_path.size() > ext.size() && records_path.ends_with(ext))
        return records_path.substr(0, records_path.size() - ext.size()) + ".summary.csv";
    return records_path + ".summary.csv";
}

int run(const RunManifest &manifest, std::ostream &out, std::ostream &err) {
    try {
        ParsedConfig parsed;
        if (!manifest.config_path.empty()) {
            std::ifstream in(manifest.config_path);
            if (!in)
                throw ConfigError("cannot read config file '" + manifest.config_path + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            parsed = parse_config(buffer.str());
        }
        if (manifest.preset) {
            if (parsed.sweep_specified)
                throw ConfigError("--preset and sweep keys in the config file are mutually "
                                  "exclusive");
            apply_preset(*manifest.preset, parsed.system, parsed.sweep);
            parsed.sweep_specified = true;
        }
        for (const auto &[key, value] : manifest.overrides)
            apply_override(parsed, key, value);
        if (!parsed.sweep_specified || parsed.sweep.values.empty())
            throw ConfigError("no sweep specified: use --preset or set sweep_parameter and "
                              "sweep_values");

        parsed.sweep.master_seed = manifest.seed;
        parsed.sweep.workers = manifest.workers;
        parsed.sweep.validate();

        // warnings come from the first swept configuration, which is what runs
        const SystemConfig first =
            apply_swept_parameter(parsed.system, parsed.sweep.swept, parsed.sweep.values.front());
        for (const auto &warning : first.validate())
            err << "warning: " << warning << '\n';

        const std::vector<SweepRecord> records = run_sweep(parsed.sweep, parsed.system);
        const std::vector<SummaryRow> rows = summarize(records);

        {
            std::ofstream file(manifest.output_path);
            if (!file)
                throw std::runtime_error("cannot write '" + manifest.output_path + "'");
            write_records_csv(file, records);
        }
        {
            const std::string path = summary_path(manifest.output_path);
            std::ofstream file(path);
            if (!file)
                throw std::runtime_error("cannot write '" + path + "'");
            write_summary_csv(file, rows);
        }

        for (const auto &row : rows)
            out << to_string(row.swept) << '=' << format_csv_double(row.swept_value) << ' '
                << to_string(row.ap_type) << " mean_se=" << format_csv_double(row.mean)
                << " stderr=" << format_csv_double(row.std_error) << " n=" << row.n << '\n';
        return 0;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Monte Carlo uplink SE sweeps for fixed, rotary and movable antenna arrays"};
    RunManifest manifest;
    std::string preset_name;
    std::vector<std::string> sets;

    app.add_option("--config", manifest.config_path, "key = value config file")
        ->check(CLI::ExistingFile);
    app.add_option("--preset", preset_name, "figure preset: fig6 | fig7 | fig8 | fig9");
    app.add_option("--set", sets, "override key=value (repeatable)");
    app.add_option("--out", manifest.output_path,
                   "records CSV path; the summary CSV is written next to it")
        ->capture_default_str();
    app.add_option("--seed", manifest.seed, "master seed")
        ->envname("ARRAYSIM_SEED")
        ->capture_default_str();
    app.add_option("--workers", manifest.workers, "parallel realization workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (!preset_name.empty()) {
        const auto preset = preset_from_string(preset_name);
        if (!preset) {
            err << "config error: unknown preset '" << preset_name << "'\n";
            return 2;
        }
        manifest.preset = preset;
    }
    for (const auto &assignment : sets) {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos || trim(assignment.substr(0, eq)).empty()) {
            err << "config error: --set expects key=value, got '" << assignment << "'\n";
            return 2;
        }
        manifest.overrides.emplace_back(std::string(trim(assignment.substr(0, eq))),
                                        std::string(trim(assignment.substr(eq + 1))));
    }
    return run(manifest, out, err);
}

} // namespace arraysim
