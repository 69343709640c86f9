#include "leoiab/allocator_tdd.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "leoiab/errors.hpp"

namespace leoiab {

double tdd_ue_sinr(const LinkGains& gains, double p_access_w, const SatelliteNode& s2,
                   const SpectrumPlan& spectrum, TddPhase phase) {
    const double noise_w = noise_power(spectrum, spectrum.fdd_bandwidth_hz);
    if (phase == TddPhase::s2_receiving) {
        return p_access_w * gains.beta_ue1 / noise_w;
    }
    const double interference_w = s2.total_power_w * gains.beta_ue2 *
                                  (spectrum.fdd_bandwidth_hz / spectrum.total_bandwidth_hz);
    return p_access_w * gains.beta_ue1 / (interference_w + noise_w);
}

double tdd_s2_sinr(const LinkGains& gains, double p_isl_w, const UserTerminal& ue,
                   const SpectrumPlan& spectrum) {
    const double noise_w = noise_power(spectrum, spectrum.total_bandwidth_hz);
    return p_isl_w * gains.beta_isl / (ue.uplink_power_w * gains.beta_ue2 + noise_w);
}

std::pair<double, double> tdd_access_rates(const LinkGains& gains, const PowerAllocation& alloc,
                                           const SatelliteNode& s1, const SatelliteNode& s2,
                                           const SpectrumPlan& spectrum) {
    const double rate1 = shannon_rate_bps(
        spectrum.fdd_bandwidth_hz,
        tdd_ue_sinr(gains, alloc.p_access_w, s2, spectrum, TddPhase::s2_receiving));
    const double rate2 = shannon_rate_bps(
        spectrum.fdd_bandwidth_hz,
        tdd_ue_sinr(gains, s1.total_power_w, s2, spectrum, TddPhase::s2_transmitting));
    return {rate1, rate2};
}

double tdd_isl_rate(const LinkGains& gains, const PowerAllocation& alloc, const UserTerminal& ue,
                    const SpectrumPlan& spectrum) {
    return 0.5 * shannon_rate_bps(spectrum.total_bandwidth_hz,
                                  tdd_s2_sinr(gains, alloc.p_isl_w, ue, spectrum));
}

ConcaveSplitProblem tdd_split_problem(const LinkGains& gains, const SatelliteNode& s1,
                                      const SatelliteNode& s2, const UserTerminal& ue,
                                      const SpectrumPlan& spectrum) {
    const double noise_fdd_w = noise_power(spectrum, spectrum.fdd_bandwidth_hz);
    const double noise_tdd_w = noise_power(spectrum, spectrum.total_bandwidth_hz);
    const double a = gains.beta_ue1 / noise_fdd_w;
    const double c = gains.beta_isl / (ue.uplink_power_w * gains.beta_ue2 + noise_tdd_w);
    if (!(a > 0.0) || !(c > 0.0)) {
        throw std::domain_error("tdd allocator: channel gains must be positive");
    }
    const double budget = s1.total_power_w;
    if (!(budget > 0.0)) {
        throw std::domain_error("tdd allocator: power budget must be positive");
    }

    // Access rate of the phase where the neighbour transmits: the whole
    // budget goes to the terminal, so it does not depend on the split.
    const double rate_access2_bps = shannon_rate_bps(
        spectrum.fdd_bandwidth_hz,
        tdd_ue_sinr(gains, budget, s2, spectrum, TddPhase::s2_transmitting));
    const double max_avg_access_bps =
        0.5 * (shannon_rate_bps(spectrum.fdd_bandwidth_hz, a * budget) + rate_access2_bps);
    if (ue.min_access_rate_bps > max_avg_access_bps + min_rate_tolerance_bps) {
        throw infeasible_error(
            "tdd allocator: minimum access rate " + std::to_string(ue.min_access_rate_bps) +
                " bit/s is infeasible; the full budget achieves an average of only " +
                std::to_string(max_avg_access_bps) + " bit/s",
            max_avg_access_bps);
    }

    const double needed_rate1_bps = std::max(0.0, 2.0 * ue.min_access_rate_bps - rate_access2_bps);
    double floor = min_power_for_rate(needed_rate1_bps, spectrum.fdd_bandwidth_hz, a);
    if (floor > budget || budget - floor <= 1e-12 * budget) {
        floor = budget;
    }
    return {spectrum.fdd_bandwidth_hz, a, 0.5 * spectrum.total_bandwidth_hz, c, budget, floor};
}

PowerAllocation tdd_optimal_allocation(const LinkGains& gains, const SatelliteNode& s1,
                                       const SatelliteNode& s2, const UserTerminal& ue,
                                       const SpectrumPlan& spectrum) {
    const PowerSplit split = solve_split(tdd_split_problem(gains, s1, s2, ue, spectrum));
    return {split.p_a_w, split.p_b_w};
}

TddResult tdd_evaluate(const LinkGains& gains, const SatelliteNode& s1, const SatelliteNode& s2,
                       const UserTerminal& ue, const SpectrumPlan& spectrum) {
    const PowerAllocation alloc = tdd_optimal_allocation(gains, s1, s2, ue, spectrum);
    TddResult result;
    result.allocation = alloc;
    result.sinr_ue_phase0 =
        tdd_ue_sinr(gains, alloc.p_access_w, s2, spectrum, TddPhase::s2_receiving);
    result.sinr_ue_phase1 =
        tdd_ue_sinr(gains, s1.total_power_w, s2, spectrum, TddPhase::s2_transmitting);
    result.sinr_s2 = tdd_s2_sinr(gains, alloc.p_isl_w, ue, spectrum);
    const auto [rate1, rate2] = tdd_access_rates(gains, alloc, s1, s2, spectrum);
    result.rate_access1_bps = rate1;
    result.rate_access2_bps = rate2;
    result.rate_isl_bps = tdd_isl_rate(gains, alloc, ue, spectrum);
    result.rate_total_bps = result.rate_isl_bps + 0.5 * (rate1 + rate2);
    return result;
}

}  // namespace leoiab
