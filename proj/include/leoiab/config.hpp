#pragma once

#include <filesystem>
#include <string>

#include "leoiab/channel.hpp"
#include "leoiab/geometry.hpp"

namespace leoiab {

enum class IslMode { fdd, tdd, both };

// One scenario, as written in a flat "key = value" file ('#' comments, one
// pair per line). Values keep the units the file uses (km, dBm, dBi, Hz);
// conversion to SI happens in make_scenario, nowhere else. Omitted keys
// keep the defaults below.
struct ScenarioConfig {
    double carrier_frequency_hz = 2.0e9;
    double total_bandwidth_hz = 40.0e6;
    double fdd_fraction = 0.5;  // one FDD direction's share of the total band
    double altitude_km = 600.0;
    int num_satellites_per_plane = 30;
    double sat_antenna_gain_dbi = 32.0;
    double s2_antenna_gain_dbi = 32.0;  // defaults to sat_antenna_gain_dbi
    double interferer_gain_dbi = 32.0;  // defaults to s2_antenna_gain_dbi
    double ue_antenna_gain_dbi = 0.0;
    double sat_total_power_dbm = 30.0;
    double s2_power_dbm = 30.0;  // defaults to sat_total_power_dbm
    double ue_tx_power_dbm = 20.0;
    double noise_psd_dbm_hz = -174.0;
    double min_access_rate_bps = 10.0e6;
    double earth_radius_km = 6371.0;
    IslMode isl_mode = IslMode::both;
};

// SI-unit view of a config, ready for the channel and the allocators.
struct Scenario {
    PlaneGeometry plane;
    SatelliteNode s1;
    SatelliteNode s2;
    UserTerminal ue;
    SpectrumPlan spectrum;
    double interferer_gain_linear;
};

// Parse config text. Unknown keys and malformed lines are reported with
// their line number; every constraint violation is listed, not just the
// first. Throws config_error.
ScenarioConfig parse_config(const std::string& text);

ScenarioConfig load_config(const std::filesystem::path& path);

// Inverse of parse_config up to formatting: emits every key explicitly, so
// a dump/parse round trip reproduces the effective configuration exactly.
std::string dump_config(const ScenarioConfig& config);

Scenario make_scenario(const ScenarioConfig& config);

const char* to_string(IslMode mode);

}  // namespace leoiab
