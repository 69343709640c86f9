#include <cmath>
#include <vector>

#include <doctest.h>

#include "leoiab/allocator_fdd.hpp"
#include "leoiab/errors.hpp"
#include "leoiab/units.hpp"

using namespace leoiab;

namespace {

// Link-budget oracle values for the default scenario (600 km, 30 satellites,
// 2 GHz, 32/0 dBi) computed ahead of the build in arbitrary precision.
constexpr double gamma_ue_halfwatt_600 = 3.93368150978876;
constexpr double gamma_s2_halfwatt_600 = 1056.77469927625;
constexpr double fdd_1200_pa_unconstrained = 0.246064259610825;
constexpr double fdd_1200_access_rate_unconstrained = 11389223.2530665;
constexpr double fdd_1200_norm_28M = 0.833324109980529;

SpectrumPlan table_spectrum() {
    return {.carrier_hz = 2.0e9,
            .total_bandwidth_hz = 40.0e6,
            .fdd_bandwidth_hz = 20.0e6,
            .noise_psd_w_per_hz = dbm_to_watts(-174.0)};
}

LinkGains table_gains(double altitude_m) {
    const PlaneGeometry plane{6371.0e3, altitude_m, 30};
    const SatelliteNode sat{altitude_m, from_db(32.0), 1.0};
    const UserTerminal ue{1.0, dbm_to_watts(20.0), 10.0e6};
    return link_gains(sat, sat, ue, plane, table_spectrum());
}

// Synthetic gains for shape tests; the geometry block is irrelevant to the
// allocator and stays zeroed.
LinkGains synthetic_gains(double beta_ue1, double beta_isl) {
    LinkGains gains{};
    gains.beta_ue1 = beta_ue1;
    gains.beta_ue2 = beta_ue1;
    gains.beta_isl = beta_isl;
    return gains;
}

}  // namespace

TEST_CASE("FDD SNRs match the dB-domain link budget") {
    const LinkGains gains = table_gains(600.0e3);
    const PowerAllocation alloc{0.5, 0.5};
    const auto [snr_ue, snr_s2] = fdd_snrs(gains, alloc, table_spectrum());
    CHECK(snr_ue == doctest::Approx(gamma_ue_halfwatt_600).epsilon(1e-12));
    CHECK(snr_s2 == doctest::Approx(gamma_s2_halfwatt_600).epsilon(1e-12));

    // Same numbers through the dB domain: P + beta - N.
    const double noise_dbm = watts_to_dbm(noise_power(table_spectrum(), 20.0e6));
    const double snr_ue_db = watts_to_dbm(0.5) + to_db(gains.beta_ue1) - noise_dbm;
    CHECK(to_db(snr_ue) == doctest::Approx(snr_ue_db).epsilon(1e-12));
}

TEST_CASE("FDD SNR is zero at zero power and scale invariant") {
    const LinkGains gains = table_gains(600.0e3);
    const auto [snr_zero, snr_s2] = fdd_snrs(gains, {0.0, 1.0}, table_spectrum());
    CHECK(snr_zero == 0.0);
    CHECK(snr_s2 > 0.0);

    // Scaling power and noise PSD together changes nothing.
    SpectrumPlan scaled = table_spectrum();
    scaled.noise_psd_w_per_hz *= 7.0;
    const auto [snr_base, unused_b] = fdd_snrs(gains, {0.5, 0.5}, table_spectrum());
    const auto [snr_scaled, unused_s] = fdd_snrs(gains, {0.5 * 7.0, 0.5}, scaled);
    CHECK(snr_scaled == doctest::Approx(snr_base).epsilon(1e-12));
}

TEST_CASE("FDD throughput composes the two Shannon terms") {
    const LinkGains gains = table_gains(600.0e3);
    const SpectrumPlan spectrum = table_spectrum();

    const FddResult zero = fdd_throughput(gains, {0.0, 0.0}, spectrum);
    CHECK(zero.rate_total_bps == 0.0);

    // An SNR of exactly one yields exactly one bit per hertz.
    const double noise_w = noise_power(spectrum, spectrum.fdd_bandwidth_hz);
    const double p_unit = noise_w / gains.beta_ue1;
    const FddResult unit = fdd_throughput(gains, {p_unit, 0.0}, spectrum);
    CHECK(unit.rate_access_bps == doctest::Approx(spectrum.fdd_bandwidth_hz).epsilon(1e-12));

    const FddResult both = fdd_throughput(gains, {0.4, 0.6}, spectrum);
    CHECK(both.rate_total_bps ==
          doctest::Approx(both.rate_access_bps + both.rate_isl_bps).epsilon(1e-15));
}

TEST_CASE("equal links with no rate floor split the budget in half") {
    const LinkGains gains = synthetic_gains(1.0e-12, 1.0e-12);
    const SatelliteNode s1{600.0e3, from_db(32.0), 2.0};
    const UserTerminal ue{1.0, 0.1, 0.0};
    const PowerAllocation alloc = fdd_optimal_allocation(gains, s1, ue, table_spectrum());
    CHECK(alloc.p_access_w == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(alloc.p_isl_w == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("an overwhelming backhaul channel drains the access power") {
    // 1/(2b) - 1/(2a) <= -P/2 pushes the stationary point at or below zero.
    const LinkGains gains = synthetic_gains(5.0e-14, 1.0e-7);
    const SatelliteNode s1{600.0e3, from_db(32.0), 1.0};
    const UserTerminal ue{1.0, 0.1, 0.0};
    const PowerAllocation alloc = fdd_optimal_allocation(gains, s1, ue, table_spectrum());
    CHECK(alloc.p_access_w == 0.0);
    CHECK(alloc.p_isl_w == 1.0);
}

TEST_CASE("default 1200 km scenario reproduces the expected optimum") {
    const LinkGains gains = table_gains(1200.0e3);
    const SatelliteNode s1{1200.0e3, from_db(32.0), 1.0};
    const SpectrumPlan spectrum = table_spectrum();

    UserTerminal ue{1.0, dbm_to_watts(20.0), 0.0};
    const FddResult unconstrained = fdd_evaluate(gains, s1, ue, spectrum);
    CHECK(unconstrained.allocation.p_access_w ==
          doctest::Approx(fdd_1200_pa_unconstrained).epsilon(1e-9));
    CHECK(unconstrained.rate_access_bps ==
          doctest::Approx(fdd_1200_access_rate_unconstrained).epsilon(1e-9));

    // A 28 Mbit/s floor forces the clamp onto the constraint boundary.
    ue.min_access_rate_bps = 28.0e6;
    const FddResult constrained = fdd_evaluate(gains, s1, ue, spectrum);
    CHECK(constrained.allocation.p_access_w / s1.total_power_w ==
          doctest::Approx(fdd_1200_norm_28M).epsilon(1e-9));
    CHECK(constrained.rate_access_bps >= 28.0e6 - min_rate_tolerance_bps);
}

TEST_CASE("the feasibility boundary returns the full budget to access") {
    const LinkGains gains = table_gains(600.0e3);
    const SatelliteNode s1{600.0e3, from_db(32.0), 1.0};
    const SpectrumPlan spectrum = table_spectrum();
    const double a = gains.beta_ue1 / noise_power(spectrum, spectrum.fdd_bandwidth_hz);
    const double max_rate = shannon_rate_bps(spectrum.fdd_bandwidth_hz, a * s1.total_power_w);

    const UserTerminal at_boundary{1.0, 0.1, max_rate};
    const PowerAllocation alloc = fdd_optimal_allocation(gains, s1, at_boundary, spectrum);
    CHECK(alloc.p_access_w == 1.0);
    CHECK(alloc.p_isl_w == 0.0);

    const UserTerminal beyond{1.0, 0.1, max_rate + 10.0};
    try {
        fdd_optimal_allocation(gains, s1, beyond, spectrum);
        FAIL("expected infeasible_error");
    } catch (const infeasible_error& e) {
        CHECK(e.max_achievable_bps == doctest::Approx(max_rate).epsilon(1e-12));
    }
}

TEST_CASE("throughput falls and access power rises with the rate floor") {
    const LinkGains gains = table_gains(1200.0e3);
    const SatelliteNode s1{1200.0e3, from_db(32.0), 1.0};
    const SpectrumPlan spectrum = table_spectrum();

    double previous_total = std::numeric_limits<double>::infinity();
    double previous_access_power = 0.0;
    for (double rate = 0.0; rate <= 31.0e6; rate += 0.5e6) {
        const UserTerminal ue{1.0, dbm_to_watts(20.0), rate};
        const FddResult result = fdd_evaluate(gains, s1, ue, spectrum);
        CHECK(result.rate_total_bps <= previous_total * (1.0 + 1e-12));
        CHECK(result.allocation.p_access_w >= previous_access_power * (1.0 - 1e-12));
        CHECK(result.allocation.p_access_w + result.allocation.p_isl_w ==
              doctest::Approx(1.0).epsilon(1e-12));
        previous_total = result.rate_total_bps;
        previous_access_power = result.allocation.p_access_w;
    }
}

TEST_CASE("optimal throughput grows concavely with the power budget") {
    const LinkGains gains = table_gains(600.0e3);
    const SpectrumPlan spectrum = table_spectrum();
    const UserTerminal ue{1.0, dbm_to_watts(20.0), 10.0e6};

    std::vector<double> totals;
    for (double budget = 0.5; budget <= 10.0; budget += 0.25) {
        const SatelliteNode s1{600.0e3, from_db(32.0), budget};
        totals.push_back(fdd_evaluate(gains, s1, ue, spectrum).rate_total_bps);
    }
    for (size_t i = 1; i < totals.size(); ++i) {
        CHECK(totals[i] > totals[i - 1]);
    }
    for (size_t i = 2; i < totals.size(); ++i) {
        const double first = totals[i - 1] - totals[i - 2];
        const double second = totals[i] - totals[i - 1];
        CHECK(second <= first * (1.0 + 1e-9));
    }
}
