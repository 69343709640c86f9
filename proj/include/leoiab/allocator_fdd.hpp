#pragma once

#include <utility>

#include "leoiab/channel.hpp"
#include "leoiab/numerics.hpp"

namespace leoiab {

// Slack for comparisons against the minimum-rate threshold, so the
// feasibility boundary itself stays feasible under floating point.
inline constexpr double min_rate_tolerance_bps = 1.0;

// Split of the serving satellite's transmit power between the access link
// and the backhaul it originates.
struct PowerAllocation {
    double p_access_w;
    double p_isl_w;
};

struct FddResult {
    double snr_ue;
    double snr_s2;
    double rate_access_bps;
    double rate_isl_bps;
    double rate_total_bps;
    PowerAllocation allocation;
};

// SNRs at the terminal and at the neighbour satellite. Each direction runs
// in its own fdd_bandwidth_hz slice, so neither link interferes with the
// other.
std::pair<double, double> fdd_snrs(const LinkGains& gains, const PowerAllocation& alloc,
                                   const SpectrumPlan& spectrum);

// Access, backhaul and total rates for a given power split.
FddResult fdd_throughput(const LinkGains& gains, const PowerAllocation& alloc,
                         const SpectrumPlan& spectrum);

// The split problem behind fdd_optimal_allocation, exposed so tests can run
// the grid oracle against exactly the instance the allocator solves.
// Performs the feasibility check and throws infeasible_error (carrying the
// maximum achievable access rate) when even the full budget misses the
// minimum access rate.
ConcaveSplitProblem fdd_split_problem(const LinkGains& gains, const SatelliteNode& s1,
                                      const UserTerminal& ue, const SpectrumPlan& spectrum);

// Throughput-optimal split of s1's budget: closed-form water-filling with
// the access power clamped to [P_min(rate floor), budget].
PowerAllocation fdd_optimal_allocation(const LinkGains& gains, const SatelliteNode& s1,
                                       const UserTerminal& ue, const SpectrumPlan& spectrum);

// Optimal allocation and the rates it achieves, in one call.
FddResult fdd_evaluate(const LinkGains& gains, const SatelliteNode& s1, const UserTerminal& ue,
                       const SpectrumPlan& spectrum);

}  // namespace leoiab
