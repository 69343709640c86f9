#include "leoiab/allocator_fdd.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "leoiab/errors.hpp"

namespace leoiab {

std::pair<double, double> fdd_snrs(const LinkGains& gains, const PowerAllocation& alloc,
                                   const SpectrumPlan& spectrum) {
    const double noise_w = noise_power(spectrum, spectrum.fdd_bandwidth_hz);
    return {alloc.p_access_w * gains.beta_ue1 / noise_w,
            alloc.p_isl_w * gains.beta_isl / noise_w};
}

FddResult fdd_throughput(const LinkGains& gains, const PowerAllocation& alloc,
                         const SpectrumPlan& spectrum) {
    const auto [snr_ue, snr_s2] = fdd_snrs(gains, alloc, spectrum);
    FddResult result;
    result.snr_ue = snr_ue;
    result.snr_s2 = snr_s2;
    result.rate_access_bps = shannon_rate_bps(spectrum.fdd_bandwidth_hz, snr_ue);
    result.rate_isl_bps = shannon_rate_bps(spectrum.fdd_bandwidth_hz, snr_s2);
    result.rate_total_bps = result.rate_access_bps + result.rate_isl_bps;
    result.allocation = alloc;
    return result;
}

ConcaveSplitProblem fdd_split_problem(const LinkGains& gains, const SatelliteNode& s1,
                                      const UserTerminal& ue, const SpectrumPlan& spectrum) {
    const double noise_w = noise_power(spectrum, spectrum.fdd_bandwidth_hz);
    const double a = gains.beta_ue1 / noise_w;
    const double b = gains.beta_isl / noise_w;
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::domain_error("fdd allocator: channel gains must be positive");
    }
    const double budget = s1.total_power_w;
    if (!(budget > 0.0)) {
        throw std::domain_error("fdd allocator: power budget must be positive");
    }

    const double max_access_bps = shannon_rate_bps(spectrum.fdd_bandwidth_hz, a * budget);
    if (ue.min_access_rate_bps > max_access_bps + min_rate_tolerance_bps) {
        throw infeasible_error(
            "fdd allocator: minimum access rate " + std::to_string(ue.min_access_rate_bps) +
                " bit/s is infeasible; the full budget achieves only " +
                std::to_string(max_access_bps) + " bit/s",
            max_access_bps);
    }

    double floor = min_power_for_rate(ue.min_access_rate_bps, spectrum.fdd_bandwidth_hz, a);
    // The feasibility test passed, so a floor at or past the budget is only
    // floating-point spill from inverting the rate; snap it to the boundary.
    if (floor > budget || budget - floor <= 1e-12 * budget) {
        floor = budget;
    }
    return {spectrum.fdd_bandwidth_hz, a, spectrum.fdd_bandwidth_hz, b, budget, floor};
}

PowerAllocation fdd_optimal_allocation(const LinkGains& gains, const SatelliteNode& s1,
                                       const UserTerminal& ue, const SpectrumPlan& spectrum) {
    const PowerSplit split = solve_split(fdd_split_problem(gains, s1, ue, spectrum));
    return {split.p_a_w, split.p_b_w};
}

FddResult fdd_evaluate(const LinkGains& gains, const SatelliteNode& s1, const UserTerminal& ue,
                       const SpectrumPlan& spectrum) {
    return fdd_throughput(gains, fdd_optimal_allocation(gains, s1, ue, spectrum), spectrum);
}

}  // namespace leoiab
