#include "leoiab/cli.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "leoiab/allocator_fdd.hpp"
#include "leoiab/allocator_tdd.hpp"
#include "leoiab/config.hpp"
#include "leoiab/errors.hpp"
#include "leoiab/experiments.hpp"
#include "leoiab/units.hpp"

namespace leoiab {

namespace {

std::string fmt(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

void print_geometry(std::ostream& out, const GeometrySolution& geo) {
    out << "d1_m = " << fmt(geo.d1_m) << "\n"
        << "d2_m = " << fmt(geo.d2_m) << "\n"
        << "d_isl_m = " << fmt(geo.d_isl_m) << "\n"
        << "d_isl_max_m = " << fmt(geo.d_isl_max_m) << "\n"
        << "isl_visible = " << (geo.isl_visible ? "true" : "false") << "\n";
}

void print_gains(std::ostream& out, const LinkGains& gains) {
    out << "beta_ue1_db = " << fmt(to_db(gains.beta_ue1)) << "\n"
        << "beta_ue1_linear = " << fmt(gains.beta_ue1) << "\n"
        << "beta_ue2_db = " << fmt(to_db(gains.beta_ue2)) << "\n"
        << "beta_ue2_linear = " << fmt(gains.beta_ue2) << "\n"
        << "beta_isl_db = " << fmt(to_db(gains.beta_isl)) << "\n"
        << "beta_isl_linear = " << fmt(gains.beta_isl) << "\n"
        << "d1_m = " << fmt(gains.geometry.d1_m) << "\n"
        << "d2_m = " << fmt(gains.geometry.d2_m) << "\n"
        << "d_isl_m = " << fmt(gains.geometry.d_isl_m) << "\n";
}

std::string render_fdd(const FddResult& result) {
    std::string text;
    text += "fdd.p_access_w = " + fmt(result.allocation.p_access_w) + "\n";
    text += "fdd.p_isl_w = " + fmt(result.allocation.p_isl_w) + "\n";
    text += "fdd.snr_ue_db = " + fmt(to_db(result.snr_ue)) + "\n";
    text += "fdd.snr_s2_db = " + fmt(to_db(result.snr_s2)) + "\n";
    text += "fdd.rate_access_bps = " + fmt(result.rate_access_bps) + "\n";
    text += "fdd.rate_isl_bps = " + fmt(result.rate_isl_bps) + "\n";
    text += "fdd.rate_total_bps = " + fmt(result.rate_total_bps) + "\n";
    return text;
}

std::string render_tdd(const TddResult& result) {
    std::string text;
    text += "tdd.p_access_w = " + fmt(result.allocation.p_access_w) + "\n";
    text += "tdd.p_isl_w = " + fmt(result.allocation.p_isl_w) + "\n";
    text += "tdd.sinr_ue_phase0_db = " + fmt(to_db(result.sinr_ue_phase0)) + "\n";
    text += "tdd.sinr_ue_phase1_db = " + fmt(to_db(result.sinr_ue_phase1)) + "\n";
    text += "tdd.sinr_s2_db = " + fmt(to_db(result.sinr_s2)) + "\n";
    text += "tdd.rate_access1_bps = " + fmt(result.rate_access1_bps) + "\n";
    text += "tdd.rate_access2_bps = " + fmt(result.rate_access2_bps) + "\n";
    text += "tdd.rate_access_avg_bps = " +
            fmt(0.5 * (result.rate_access1_bps + result.rate_access2_bps)) + "\n";
    text += "tdd.rate_isl_bps = " + fmt(result.rate_isl_bps) + "\n";
    text += "tdd.rate_total_bps = " + fmt(result.rate_total_bps) + "\n";
    return text;
}

int run_allocate(const ScenarioConfig& config, std::ostream& out, std::ostream& err) {
    const Scenario scenario = make_scenario(config);
    const LinkGains gains = link_gains(scenario.s1, scenario.s2, scenario.ue, scenario.plane,
                                       scenario.spectrum, scenario.interferer_gain_linear);
    std::string artifact;
    std::vector<std::string> failures;
    if (config.isl_mode != IslMode::tdd) {
        try {
            artifact += render_fdd(fdd_evaluate(gains, scenario.s1, scenario.ue, scenario.spectrum));
        } catch (const infeasible_error& e) {
            failures.emplace_back(e.what());
        }
    }
    if (config.isl_mode != IslMode::fdd) {
        try {
            artifact += render_tdd(
                tdd_evaluate(gains, scenario.s1, scenario.s2, scenario.ue, scenario.spectrum));
        } catch (const infeasible_error& e) {
            failures.emplace_back(e.what());
        }
    }
    out << artifact;
    for (const std::string& failure : failures) {
        err << "error: " << failure << "\n";
    }
    return failures.empty() ? exit_ok : exit_infeasible;
}

SweepVariable variable_from_name(const std::string& name) {
    if (name == "sat_power_dbm") return SweepVariable::sat_power_dbm;
    if (name == "min_rate_bps") return SweepVariable::min_rate_bps;
    if (name == "num_satellites") return SweepVariable::num_satellites;
    return SweepVariable::altitude_m;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"LEO satellite integrated access and backhaul: geometry, link budgets and "
                 "throughput-optimal power allocation under FDD or TDD backhauling",
                 "leoiab"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string config_path;
    app.add_option("-c,--config", config_path,
                   "scenario config file (flat key = value lines, '#' comments)");

    CLI::App* geometry_cmd =
        app.add_subcommand("geometry", "print slant ranges and ISL visibility");
    CLI::App* gains_cmd = app.add_subcommand("gains", "print link gains in dB and linear");
    CLI::App* allocate_cmd = app.add_subcommand(
        "allocate", "optimal power split and throughput per the configured isl_mode");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "parameter sweep, tabular output");
    for (CLI::App* sub : {geometry_cmd, gains_cmd, allocate_cmd, sweep_cmd}) {
        sub->fallthrough();  // lets --config follow the subcommand
    }

    std::string var_name;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    std::string format_name = "csv";
    std::string output_path;
    int threads = 1;
    sweep_cmd->add_option("--var", var_name, "swept variable")
        ->required()
        ->check(CLI::IsMember({"sat_power_dbm", "min_rate_bps", "num_satellites", "altitude_m"}));
    sweep_cmd->add_option("--from", from, "first swept value")->required();
    sweep_cmd->add_option("--to", to, "last swept value (inclusive)")->required();
    sweep_cmd->add_option("--step", step, "grid step")->required();
    sweep_cmd->add_option("--output", output_path, "write the table here instead of stdout");
    sweep_cmd->add_option("--format", format_name, "table format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--threads", threads, "worker threads for point evaluation")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config_error;
    }

    ScenarioConfig config;
    try {
        if (!config_path.empty()) {
            config = load_config(config_path);
        }
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }

    try {
        if (geometry_cmd->parsed()) {
            print_geometry(out, solve_geometry(make_scenario(config).plane));
            return exit_ok;
        }
        if (gains_cmd->parsed()) {
            const Scenario scenario = make_scenario(config);
            print_gains(out, link_gains(scenario.s1, scenario.s2, scenario.ue, scenario.plane,
                                        scenario.spectrum, scenario.interferer_gain_linear));
            return exit_ok;
        }
        if (allocate_cmd->parsed()) {
            return run_allocate(config, out, err);
        }
        SweepSpec spec;
        spec.variable = variable_from_name(var_name);
        spec.from = from;
        spec.to = to;
        spec.step = step;
        spec.base_config = config;
        spec.include_fdd = config.isl_mode != IslMode::tdd;
        spec.include_tdd = config.isl_mode != IslMode::fdd;
        const std::vector<SweepRow> rows = run_sweep(spec, threads);
        const TableFormat format =
            format_name == "json" ? TableFormat::json : TableFormat::csv;
        if (output_path.empty()) {
            out << emit_table(rows, format);
        } else {
            write_table(rows, format, output_path);
        }
        return exit_ok;
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const infeasible_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_infeasible;
    } catch (const isl_not_visible_error& e) {
        err << "error: " << e.what() << "; at this altitude at least "
            << min_satellites_for_isl(config.altitude_km * 1000.0, config.earth_radius_km * 1000.0)
            << " satellites per plane are needed\n";
        return exit_isl_not_visible;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }
}

}  // namespace leoiab
