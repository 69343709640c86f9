#include "leoiab/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "leoiab/errors.hpp"
#include "leoiab/units.hpp"

namespace leoiab {

namespace {

std::string trim(const std::string& s) {
    size_t begin = 0;
    size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

struct RawEntry {
    std::string value;
    int line;
};

double parse_number(const std::string& value, const std::string& key, int line,
                    std::vector<std::string>& errors) {
    try {
        size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return parsed;
    } catch (const std::exception&) {
        errors.push_back("line " + std::to_string(line) + ": value '" + value + "' for key '" +
                         key + "' is not a number");
        return 0.0;
    }
}

int parse_integer(const std::string& value, const std::string& key, int line,
                  std::vector<std::string>& errors) {
    try {
        size_t consumed = 0;
        const long parsed = std::stol(value, &consumed);
        if (consumed != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return static_cast<int>(parsed);
    } catch (const std::exception&) {
        errors.push_back("line " + std::to_string(line) + ": value '" + value + "' for key '" +
                         key + "' is not an integer");
        return 0;
    }
}

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

}  // namespace

const char* to_string(IslMode mode) {
    switch (mode) {
        case IslMode::fdd: return "fdd";
        case IslMode::tdd: return "tdd";
        case IslMode::both: return "both";
    }
    return "both";
}

ScenarioConfig parse_config(const std::string& text) {
    std::map<std::string, RawEntry> entries;
    std::vector<std::string> errors;

    std::istringstream stream(text);
    std::string raw_line;
    int line_number = 0;
    while (std::getline(stream, raw_line)) {
        ++line_number;
        const size_t hash = raw_line.find('#');
        if (hash != std::string::npos) {
            raw_line.erase(hash);
        }
        const std::string line = trim(raw_line);
        if (line.empty()) {
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(line_number) +
                             ": expected 'key = value', got '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            errors.push_back("line " + std::to_string(line_number) +
                             ": empty key or value in '" + line + "'");
            continue;
        }
        if (entries.count(key) != 0) {
            errors.push_back("line " + std::to_string(line_number) + ": duplicate key '" + key +
                             "' (first set on line " + std::to_string(entries[key].line) + ")");
            continue;
        }
        entries[key] = {value, line_number};
    }

    ScenarioConfig config;
    auto take = [&entries](const std::string& key) -> const RawEntry* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };
    auto number_key = [&](const std::string& key, double& field) {
        if (const RawEntry* entry = take(key)) {
            field = parse_number(entry->value, key, entry->line, errors);
        }
    };

    number_key("carrier_frequency_hz", config.carrier_frequency_hz);
    number_key("total_bandwidth_hz", config.total_bandwidth_hz);
    number_key("fdd_fraction", config.fdd_fraction);
    number_key("altitude_km", config.altitude_km);
    if (const RawEntry* entry = take("num_satellites_per_plane")) {
        config.num_satellites_per_plane =
            parse_integer(entry->value, "num_satellites_per_plane", entry->line, errors);
    }
    number_key("sat_antenna_gain_dbi", config.sat_antenna_gain_dbi);
    number_key("ue_antenna_gain_dbi", config.ue_antenna_gain_dbi);
    number_key("sat_total_power_dbm", config.sat_total_power_dbm);
    number_key("ue_tx_power_dbm", config.ue_tx_power_dbm);
    number_key("noise_psd_dbm_hz", config.noise_psd_dbm_hz);
    number_key("min_access_rate_bps", config.min_access_rate_bps);
    number_key("earth_radius_km", config.earth_radius_km);

    // Chained defaults: the neighbour inherits the main satellite settings,
    // and the interference path inherits the neighbour's gain.
    config.s2_antenna_gain_dbi = config.sat_antenna_gain_dbi;
    number_key("s2_antenna_gain_dbi", config.s2_antenna_gain_dbi);
    config.interferer_gain_dbi = config.s2_antenna_gain_dbi;
    number_key("interferer_gain_dbi", config.interferer_gain_dbi);
    config.s2_power_dbm = config.sat_total_power_dbm;
    number_key("s2_power_dbm", config.s2_power_dbm);

    if (const RawEntry* entry = take("isl_mode")) {
        if (entry->value == "fdd") {
            config.isl_mode = IslMode::fdd;
        } else if (entry->value == "tdd") {
            config.isl_mode = IslMode::tdd;
        } else if (entry->value == "both") {
            config.isl_mode = IslMode::both;
        } else {
            errors.push_back("line " + std::to_string(entry->line) + ": isl_mode must be one of "
                             "fdd, tdd, both; got '" + entry->value + "'");
        }
    }

    static const char* known_keys[] = {
        "carrier_frequency_hz", "total_bandwidth_hz", "fdd_fraction", "altitude_km",
        "num_satellites_per_plane", "sat_antenna_gain_dbi", "s2_antenna_gain_dbi",
        "interferer_gain_dbi", "ue_antenna_gain_dbi", "sat_total_power_dbm", "s2_power_dbm",
        "ue_tx_power_dbm", "noise_psd_dbm_hz", "min_access_rate_bps", "earth_radius_km",
        "isl_mode"};
    for (const auto& [key, entry] : entries) {
        bool known = false;
        for (const char* candidate : known_keys) {
            if (key == candidate) {
                known = true;
                break;
            }
        }
        if (!known) {
            errors.push_back("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
        }
    }

    // Constraint checks run even when parse errors exist, so one pass
    // reports everything that is wrong.
    if (!(config.carrier_frequency_hz > 0.0)) {
        errors.push_back("carrier_frequency_hz must be positive");
    }
    if (!(config.total_bandwidth_hz > 0.0)) {
        errors.push_back("total_bandwidth_hz must be positive");
    }
    if (!(config.fdd_fraction > 0.0) || config.fdd_fraction > 1.0) {
        errors.push_back("fdd_fraction must be in (0, 1]");
    }
    if (!(config.altitude_km > 0.0)) {
        errors.push_back("altitude_km must be positive");
    }
    if (config.num_satellites_per_plane < 2) {
        errors.push_back("num_satellites_per_plane must be at least 2");
    }
    if (config.min_access_rate_bps < 0.0) {
        errors.push_back("min_access_rate_bps must be non-negative");
    }
    if (!(config.earth_radius_km > 0.0)) {
        errors.push_back("earth_radius_km must be positive");
    }

    if (!errors.empty()) {
        std::string message = "invalid configuration:";
        for (const std::string& error : errors) {
            message += "\n  " + error;
        }
        throw config_error(message);
    }
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) {
        throw config_error("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    try {
        return parse_config(buffer.str());
    } catch (const config_error& error) {
        throw config_error(path.string() + ": " + error.what());
    }
}

std::string dump_config(const ScenarioConfig& config) {
    std::ostringstream out;
    out << "carrier_frequency_hz = " << format_number(config.carrier_frequency_hz) << "\n"
        << "total_bandwidth_hz = " << format_number(config.total_bandwidth_hz) << "\n"
        << "fdd_fraction = " << format_number(config.fdd_fraction) << "\n"
        << "altitude_km = " << format_number(config.altitude_km) << "\n"
        << "num_satellites_per_plane = " << config.num_satellites_per_plane << "\n"
        << "sat_antenna_gain_dbi = " << format_number(config.sat_antenna_gain_dbi) << "\n"
        << "s2_antenna_gain_dbi = " << format_number(config.s2_antenna_gain_dbi) << "\n"
        << "interferer_gain_dbi = " << format_number(config.interferer_gain_dbi) << "\n"
        << "ue_antenna_gain_dbi = " << format_number(config.ue_antenna_gain_dbi) << "\n"
        << "sat_total_power_dbm = " << format_number(config.sat_total_power_dbm) << "\n"
        << "s2_power_dbm = " << format_number(config.s2_power_dbm) << "\n"
        << "ue_tx_power_dbm = " << format_number(config.ue_tx_power_dbm) << "\n"
        << "noise_psd_dbm_hz = " << format_number(config.noise_psd_dbm_hz) << "\n"
        << "min_access_rate_bps = " << format_number(config.min_access_rate_bps) << "\n"
        << "earth_radius_km = " << format_number(config.earth_radius_km) << "\n"
        << "isl_mode = " << to_string(config.isl_mode) << "\n";
    return out.str();
}

Scenario make_scenario(const ScenarioConfig& config) {
    Scenario scenario;
    scenario.plane = {.earth_radius_m = config.earth_radius_km * 1000.0,
                      .altitude_m = config.altitude_km * 1000.0,
                      .num_satellites = config.num_satellites_per_plane};
    scenario.s1 = {.altitude_m = config.altitude_km * 1000.0,
                   .antenna_gain_linear = from_db(config.sat_antenna_gain_dbi),
                   .total_power_w = dbm_to_watts(config.sat_total_power_dbm)};
    scenario.s2 = {.altitude_m = config.altitude_km * 1000.0,
                   .antenna_gain_linear = from_db(config.s2_antenna_gain_dbi),
                   .total_power_w = dbm_to_watts(config.s2_power_dbm)};
    scenario.ue = {.antenna_gain_linear = from_db(config.ue_antenna_gain_dbi),
                   .uplink_power_w = dbm_to_watts(config.ue_tx_power_dbm),
                   .min_access_rate_bps = config.min_access_rate_bps};
    scenario.spectrum = {.carrier_hz = config.carrier_frequency_hz,
                         .total_bandwidth_hz = config.total_bandwidth_hz,
                         .fdd_bandwidth_hz = config.fdd_fraction * config.total_bandwidth_hz,
                         .noise_psd_w_per_hz = dbm_to_watts(config.noise_psd_dbm_hz)};
    scenario.interferer_gain_linear = from_db(config.interferer_gain_dbi);
    return scenario;
}

}  // namespace leoiab
