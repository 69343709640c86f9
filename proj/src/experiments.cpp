#include "leoiab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <thread>

#include "leoiab/allocator_fdd.hpp"
#include "leoiab/allocator_tdd.hpp"
#include "leoiab/errors.hpp"
#include "leoiab/units.hpp"

namespace leoiab {

namespace {

// Runs fn(0..n-1) with results slotted by index, so the caller's output is
// identical at any thread count. fn must confine its writes to slot i.
template <typename Fn>
void parallel_for(size_t n, int num_threads, Fn&& fn) {
    const size_t workers =
        std::min<size_t>(std::max(num_threads, 1), std::max<size_t>(n, 1));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = t; i < n; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& thread : pool) thread.join();
    for (size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
    }
}

ScenarioConfig at_point(const SweepSpec& spec, double value) {
    ScenarioConfig config = spec.base_config;
    switch (spec.variable) {
        case SweepVariable::sat_power_dbm:
            config.sat_total_power_dbm = value;
            // The neighbour transmits at the serving satellite's power level
            // unless the base config pins it elsewhere.
            if (spec.base_config.s2_power_dbm == spec.base_config.sat_total_power_dbm) {
                config.s2_power_dbm = value;
            }
            break;
        case SweepVariable::min_rate_bps:
            config.min_access_rate_bps = value;
            break;
        case SweepVariable::num_satellites:
            config.num_satellites_per_plane = static_cast<int>(std::llround(value));
            break;
        case SweepVariable::altitude_m:
            config.altitude_km = value / 1000.0;
            break;
    }
    return config;
}

// Gains shared by every row at one sweep point. The access gain exists even
// without ISL visibility; the ISL columns only exist with it.
void fill_gain_columns(SweepRow& row, const Scenario& scenario, const GeometrySolution& geo) {
    const double beta_ue1 =
        free_space_gain(geo.d1_m, scenario.spectrum.carrier_hz, scenario.s1.antenna_gain_linear,
                        scenario.ue.antenna_gain_linear);
    row.beta_ue1_linear = beta_ue1;
    row.beta_ue1_db = to_db(beta_ue1);
}

SweepRow allocator_row(const ScenarioConfig& config, double swept_value, bool tdd) {
    SweepRow row;
    row.swept_value = swept_value;
    row.scenario = tdd ? "TDD" : "FDD";
    const Scenario scenario = make_scenario(config);
    const GeometrySolution geo = solve_geometry(scenario.plane);
    fill_gain_columns(row, scenario, geo);
    if (!geo.isl_visible) {
        return row;  // infeasible, ISL and rate columns stay empty
    }
    const LinkGains gains = link_gains(scenario.s1, scenario.s2, scenario.ue, scenario.plane,
                                       scenario.spectrum, scenario.interferer_gain_linear);
    row.beta_isl_linear = gains.beta_isl;
    row.beta_isl_db = to_db(gains.beta_isl);
    try {
        const double budget = scenario.s1.total_power_w;
        if (tdd) {
            const TddResult result =
                tdd_evaluate(gains, scenario.s1, scenario.s2, scenario.ue, scenario.spectrum);
            row.p_access_w = result.allocation.p_access_w;
            row.p_isl_w = result.allocation.p_isl_w;
            row.normalized_access_power = result.allocation.p_access_w / budget;
            row.normalized_access_power_avg = 0.5 * (*row.normalized_access_power + 1.0);
            row.rate_access_bps = 0.5 * (result.rate_access1_bps + result.rate_access2_bps);
            row.rate_isl_bps = result.rate_isl_bps;
            row.rate_total_bps = result.rate_total_bps;
        } else {
            const FddResult result =
                fdd_evaluate(gains, scenario.s1, scenario.ue, scenario.spectrum);
            row.p_access_w = result.allocation.p_access_w;
            row.p_isl_w = result.allocation.p_isl_w;
            row.normalized_access_power = result.allocation.p_access_w / budget;
            row.rate_access_bps = result.rate_access_bps;
            row.rate_isl_bps = result.rate_isl_bps;
            row.rate_total_bps = result.rate_total_bps;
        }
        row.feasible = true;
    } catch (const infeasible_error&) {
        row.feasible = false;
        row.p_access_w.reset();
        row.p_isl_w.reset();
    }
    return row;
}

std::vector<SweepRow> allocator_sweep(const SweepSpec& spec, int num_threads) {
    if (!spec.include_fdd && !spec.include_tdd) {
        throw config_error("sweep: the scenario set must not be empty");
    }
    const std::vector<double> points = sweep_points(spec);
    const int scenarios = (spec.include_fdd ? 1 : 0) + (spec.include_tdd ? 1 : 0);
    std::vector<SweepRow> rows(points.size() * scenarios);
    parallel_for(points.size(), num_threads, [&](size_t i) {
        const ScenarioConfig config = at_point(spec, points[i]);
        size_t slot = i * scenarios;
        if (spec.include_fdd) {
            rows[slot++] = allocator_row(config, points[i], /*tdd=*/false);
        }
        if (spec.include_tdd) {
            rows[slot] = allocator_row(config, points[i], /*tdd=*/true);
        }
    });
    return rows;
}

std::string format_value(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (const char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string json_string(const std::string& text) {
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

constexpr const char* column_names[] = {
    "swept_value", "scenario", "beta_ue1_db", "beta_ue1_linear", "beta_isl_db",
    "beta_isl_linear", "p_access_w", "p_isl_w", "normalized_access_power",
    "normalized_access_power_avg", "rate_access_bps", "rate_isl_bps", "rate_total_bps",
    "feasible"};

const std::optional<double>* optional_columns(const SweepRow& row, size_t index) {
    switch (index) {
        case 2: return &row.beta_ue1_db;
        case 3: return &row.beta_ue1_linear;
        case 4: return &row.beta_isl_db;
        case 5: return &row.beta_isl_linear;
        case 6: return &row.p_access_w;
        case 7: return &row.p_isl_w;
        case 8: return &row.normalized_access_power;
        case 9: return &row.normalized_access_power_avg;
        case 10: return &row.rate_access_bps;
        case 11: return &row.rate_isl_bps;
        case 12: return &row.rate_total_bps;
        default: return nullptr;
    }
}

int scenario_rank(const std::string& scenario) {
    if (scenario == "FDD") return 0;
    if (scenario == "TDD") return 1;
    return 2;
}

}  // namespace

const char* to_string(SweepVariable variable) {
    switch (variable) {
        case SweepVariable::sat_power_dbm: return "sat_power_dbm";
        case SweepVariable::min_rate_bps: return "min_rate_bps";
        case SweepVariable::num_satellites: return "num_satellites";
        case SweepVariable::altitude_m: return "altitude_m";
    }
    return "sat_power_dbm";
}

std::vector<double> sweep_points(const SweepSpec& spec) {
    if (!(spec.step > 0.0)) {
        throw config_error("sweep: step must be positive");
    }
    if (!(spec.from <= spec.to)) {
        throw config_error("sweep: from must not exceed to");
    }
    switch (spec.variable) {
        case SweepVariable::num_satellites:
            if (spec.from < 2.0) {
                throw config_error("sweep: num_satellites values must be at least 2");
            }
            break;
        case SweepVariable::altitude_m:
            if (!(spec.from > 0.0)) {
                throw config_error("sweep: altitude values must be positive");
            }
            break;
        case SweepVariable::min_rate_bps:
            if (spec.from < 0.0) {
                throw config_error("sweep: min rate values must be non-negative");
            }
            break;
        case SweepVariable::sat_power_dbm:
            break;
    }
    const auto count =
        static_cast<size_t>(std::floor((spec.to - spec.from) / spec.step + 1e-9)) + 1;
    std::vector<double> points(count);
    for (size_t i = 0; i < count; ++i) {
        points[i] = spec.from + static_cast<double>(i) * spec.step;
    }
    return points;
}

std::vector<SweepRow> sweep_channel_gains(const SweepSpec& spec, int num_threads) {
    if (spec.variable != SweepVariable::num_satellites &&
        spec.variable != SweepVariable::altitude_m) {
        throw config_error("sweep_channel_gains: variable must be num_satellites or altitude_m");
    }
    const std::vector<double> points = sweep_points(spec);
    std::vector<SweepRow> rows(points.size());
    parallel_for(points.size(), num_threads, [&](size_t i) {
        const ScenarioConfig config = at_point(spec, points[i]);
        SweepRow row;
        row.swept_value = spec.variable == SweepVariable::num_satellites
                              ? static_cast<double>(config.num_satellites_per_plane)
                              : points[i];
        row.scenario = "CHANNEL";
        const Scenario scenario = make_scenario(config);
        const GeometrySolution geo = solve_geometry(scenario.plane);
        fill_gain_columns(row, scenario, geo);
        if (geo.isl_visible) {
            const LinkGains gains =
                link_gains(scenario.s1, scenario.s2, scenario.ue, scenario.plane,
                           scenario.spectrum, scenario.interferer_gain_linear);
            row.beta_isl_linear = gains.beta_isl;
            row.beta_isl_db = to_db(gains.beta_isl);
            row.feasible = true;
        }
        rows[i] = row;
    });
    return rows;
}

std::vector<SweepRow> sweep_power(const SweepSpec& spec, int num_threads) {
    if (spec.variable != SweepVariable::sat_power_dbm) {
        throw config_error("sweep_power: variable must be sat_power_dbm");
    }
    return allocator_sweep(spec, num_threads);
}

std::vector<SweepRow> sweep_min_rate(const SweepSpec& spec, int num_threads) {
    if (spec.variable != SweepVariable::min_rate_bps) {
        throw config_error("sweep_min_rate: variable must be min_rate_bps");
    }
    return allocator_sweep(spec, num_threads);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int num_threads) {
    switch (spec.variable) {
        case SweepVariable::sat_power_dbm:
            return sweep_power(spec, num_threads);
        case SweepVariable::min_rate_bps:
            return sweep_min_rate(spec, num_threads);
        case SweepVariable::num_satellites:
        case SweepVariable::altitude_m:
            return sweep_channel_gains(spec, num_threads);
    }
    throw config_error("run_sweep: unknown sweep variable");
}

std::string emit_table(const std::vector<SweepRow>& rows, TableFormat format) {
    if (rows.empty()) {
        throw config_error("emit_table: no rows to emit");
    }
    std::vector<const SweepRow*> ordered;
    ordered.reserve(rows.size());
    for (const SweepRow& row : rows) ordered.push_back(&row);
    std::stable_sort(ordered.begin(), ordered.end(), [](const SweepRow* a, const SweepRow* b) {
        if (a->swept_value != b->swept_value) return a->swept_value < b->swept_value;
        return scenario_rank(a->scenario) < scenario_rank(b->scenario);
    });

    constexpr size_t num_columns = std::size(column_names);
    std::string out;
    if (format == TableFormat::csv) {
        for (size_t c = 0; c < num_columns; ++c) {
            if (c) out += ',';
            out += column_names[c];
        }
        out += '\n';
        for (const SweepRow* row : ordered) {
            out += format_value(row->swept_value);
            out += ',';
            out += csv_field(row->scenario);
            for (size_t c = 2; c + 1 < num_columns; ++c) {
                out += ',';
                const auto* value = optional_columns(*row, c);
                if (value->has_value()) out += format_value(**value);
            }
            out += ',';
            out += row->feasible ? "true" : "false";
            out += '\n';
        }
        return out;
    }

    out += "[\n";
    for (size_t r = 0; r < ordered.size(); ++r) {
        const SweepRow* row = ordered[r];
        out += "  {\"swept_value\": " + format_value(row->swept_value);
        out += ", \"scenario\": " + json_string(row->scenario);
        for (size_t c = 2; c + 1 < num_columns; ++c) {
            const auto* value = optional_columns(*row, c);
            out += ", \"";
            out += column_names[c];
            out += "\": ";
            out += value->has_value() ? format_value(**value) : "null";
        }
        out += ", \"feasible\": ";
        out += row->feasible ? "true" : "false";
        out += '}';
        if (r + 1 < ordered.size()) out += ',';
        out += '\n';
    }
    out += "]\n";
    return out;
}

void write_table(const std::vector<SweepRow>& rows, TableFormat format,
                 const std::filesystem::path& path) {
    const std::string table = emit_table(rows, format);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw config_error("cannot open output file '" + path.string() + "'");
    }
    file << table;
    file.flush();
    if (!file) {
        throw config_error("failed while writing table to '" + path.string() + "'");
    }
}

}  // namespace leoiab
