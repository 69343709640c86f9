#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "leoiab/cli.hpp"

using namespace leoiab;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

double value_of(const std::string& text, const std::string& key) {
    const size_t pos = text.find(key + " = ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 3));
}

// Temp config helper; files land in the system temp dir and get removed.
class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("leoiab_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::ofstream file(path_);
        file << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("geometry subcommand prints the default solution") {
    const CliRun result = run({"geometry"});
    CHECK(result.status == exit_ok);
    CHECK(result.err.empty());
    CHECK(result.out.find("d_isl_m = 1457335.83") != std::string::npos);
    CHECK(result.out.find("d1_m = 600000") != std::string::npos);
    CHECK(result.out.find("isl_visible = true") != std::string::npos);
}

TEST_CASE("gains subcommand prints both scales") {
    const CliRun result = run({"gains"});
    CHECK(result.status == exit_ok);
    CHECK(value_of(result.out, "beta_ue1_db") == doctest::Approx(-122.031408).epsilon(1e-6));
    CHECK(value_of(result.out, "beta_isl_db") == doctest::Approx(-97.7395760).epsilon(1e-6));
    CHECK(value_of(result.out, "beta_ue1_linear") ==
          doctest::Approx(6.26410726e-13).epsilon(1e-6));
}

TEST_CASE("allocate prints both scenarios with FDD ahead") {
    const CliRun result = run({"allocate"});
    CHECK(result.status == exit_ok);
    CHECK(result.err.empty());
    const double fdd_total = value_of(result.out, "fdd.rate_total_bps");
    const double tdd_total = value_of(result.out, "tdd.rate_total_bps");
    CHECK(fdd_total >= tdd_total);
    CHECK(result.out.find("fdd.p_access_w") < result.out.find("tdd.p_access_w"));
}

TEST_CASE("isl_mode narrows the allocate output") {
    const TempFile config("isl_mode = tdd\n");
    const CliRun result = run({"--config", config.path(), "allocate"});
    CHECK(result.status == exit_ok);
    CHECK(result.out.find("tdd.rate_total_bps") != std::string::npos);
    CHECK(result.out.find("fdd.") == std::string::npos);
}

TEST_CASE("unknown subcommands and flags exit with the config status") {
    const CliRun unknown = run({"frobnicate"});
    CHECK(unknown.status == exit_config_error);
    CHECK(unknown.out.empty());
    CHECK_FALSE(unknown.err.empty());

    const CliRun missing = run({"sweep", "--var", "sat_power_dbm"});
    CHECK(missing.status == exit_config_error);

    const CliRun none = run({});
    CHECK(none.status == exit_config_error);
}

TEST_CASE("help goes to stdout with a success status") {
    const CliRun result = run({"--help"});
    CHECK(result.status == exit_ok);
    CHECK(result.out.find("sweep") != std::string::npos);
    CHECK(result.err.empty());
}

TEST_CASE("config problems exit with status 2 and name the offender") {
    const TempFile config("no_such_key = 5\n");
    const CliRun result = run({"--config", config.path(), "allocate"});
    CHECK(result.status == exit_config_error);
    CHECK(result.err.find("no_such_key") != std::string::npos);

    const CliRun missing_file = run({"--config", "/does/not/exist.cfg", "geometry"});
    CHECK(missing_file.status == exit_config_error);
    CHECK(missing_file.err.find("/does/not/exist.cfg") != std::string::npos);
}

TEST_CASE("infeasible rate floors exit with status 3 and report the ceiling") {
    const TempFile config("min_access_rate_bps = 1e9\n");
    const CliRun result = run({"--config", config.path(), "allocate"});
    CHECK(result.status == exit_infeasible);
    CHECK(result.err.find("infeasible") != std::string::npos);
}

TEST_CASE("a blocked ISL exits with status 4 and suggests the fix") {
    const TempFile config("altitude_km = 1200\nnum_satellites_per_plane = 5\n");
    const CliRun gains = run({"--config", config.path(), "gains"});
    CHECK(gains.status == exit_isl_not_visible);
    CHECK(gains.err.find("6 satellites") != std::string::npos);
    CHECK(gains.out.empty());

    // geometry still reports the (non-visible) solution: that is its artifact
    const CliRun geometry = run({"--config", config.path(), "geometry"});
    CHECK(geometry.status == exit_ok);
    CHECK(geometry.out.find("isl_visible = false") != std::string::npos);
}

TEST_CASE("sweep writes the requested table") {
    const TempFile config("altitude_km = 1200\n");
    const std::string out_path =
        (std::filesystem::temp_directory_path() / "leoiab_sweep_test.csv").string();
    const CliRun result = run({"--config", config.path(), "sweep", "--var", "min_rate_bps",
                               "--from", "10e6", "--to", "14e6", "--step", "2e6", "--output",
                               out_path});
    CHECK(result.status == exit_ok);
    CHECK(result.out.empty());  // artifact went to the file
    std::ifstream file(out_path);
    REQUIRE(file.good());
    std::string header;
    std::getline(file, header);
    CHECK(header.rfind("swept_value,scenario,", 0) == 0);
    std::filesystem::remove(out_path);
}

TEST_CASE("sweep streams csv to stdout by default") {
    const CliRun result = run({"sweep", "--var", "num_satellites", "--from", "8", "--to", "12",
                               "--step", "2"});
    CHECK(result.status == exit_ok);
    CHECK(result.out.rfind("swept_value,", 0) == 0);
    CHECK(result.out.find("CHANNEL") != std::string::npos);

    const CliRun json = run({"sweep", "--var", "num_satellites", "--from", "8", "--to", "12",
                             "--step", "2", "--format", "json"});
    CHECK(json.status == exit_ok);
    CHECK(json.out.front() == '[');
}

TEST_CASE("bad sweep ranges exit with the config status") {
    const CliRun result = run({"sweep", "--var", "num_satellites", "--from", "0", "--to", "10",
                               "--step", "1"});
    CHECK(result.status == exit_config_error);
    CHECK_FALSE(result.err.empty());
}
