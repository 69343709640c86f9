#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "leoiab/config.hpp"

namespace leoiab {

enum class SweepVariable { sat_power_dbm, min_rate_bps, num_satellites, altitude_m };

struct SweepSpec {
    SweepVariable variable;
    double from;
    double to;
    double step;
    ScenarioConfig base_config;
    bool include_fdd = true;
    bool include_tdd = true;
};

// One emitted table row. Quantities that do not exist at a point — rates of
// an infeasible allocation, the ISL gain past visibility — stay unset and
// print as empty cells, never as zeros.
struct SweepRow {
    double swept_value = 0.0;
    std::string scenario;  // "FDD", "TDD" or "CHANNEL"
    std::optional<double> beta_ue1_db;
    std::optional<double> beta_ue1_linear;
    std::optional<double> beta_isl_db;
    std::optional<double> beta_isl_linear;
    std::optional<double> p_access_w;
    std::optional<double> p_isl_w;
    std::optional<double> normalized_access_power;
    // TDD only: access share averaged over both phases; the second phase
    // spends the whole budget on access.
    std::optional<double> normalized_access_power_avg;
    std::optional<double> rate_access_bps;  // two-phase average for TDD
    std::optional<double> rate_isl_bps;
    std::optional<double> rate_total_bps;
    bool feasible = false;
};

// Grid of swept values, stepped by index so accumulation error cannot move
// the endpoints. Both endpoints inclusive.
std::vector<double> sweep_points(const SweepSpec& spec);

// Channel-condition sweep over num_satellites or altitude_m: one CHANNEL
// row per point with the access and ISL gains; points without ISL
// visibility are flagged infeasible.
std::vector<SweepRow> sweep_channel_gains(const SweepSpec& spec, int num_threads = 1);

// Throughput sweep over the satellite power budget, both duplexing modes.
// The neighbour's transmit power tracks the swept budget unless the base
// config overrides it.
std::vector<SweepRow> sweep_power(const SweepSpec& spec, int num_threads = 1);

// Throughput, power split and achieved access rate over the minimum-rate
// requirement. Infeasible requirements are flagged, not dropped.
std::vector<SweepRow> sweep_min_rate(const SweepSpec& spec, int num_threads = 1);

// Dispatch on spec.variable.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int num_threads = 1);

enum class TableFormat { csv, json };

// Deterministic serialization: rows ordered by swept value with FDD before
// TDD, fixed column order, numbers at 9 significant digits.
std::string emit_table(const std::vector<SweepRow>& rows, TableFormat format);

void write_table(const std::vector<SweepRow>& rows, TableFormat format,
                 const std::filesystem::path& path);

const char* to_string(SweepVariable variable);

}  // namespace leoiab
