#pragma once

#include <utility>

#include "leoiab/allocator_fdd.hpp"
#include "leoiab/channel.hpp"
#include "leoiab/numerics.hpp"

namespace leoiab {

// Which half of the TDD backhaul cycle is active. The neighbour satellite
// interferes with the terminal only while it transmits.
enum class TddPhase {
    s2_receiving,     // serving satellite feeds both the terminal and the neighbour
    s2_transmitting,  // neighbour talks back; the serving satellite serves the terminal alone
};

struct TddResult {
    double sinr_ue_phase0;      // terminal SNR while the neighbour receives
    double sinr_ue_phase1;      // terminal SINR under neighbour interference
    double sinr_s2;             // neighbour SINR, degraded by the terminal uplink
    double rate_access1_bps;    // access rate in the interference-free phase
    double rate_access2_bps;    // access rate under interference, full budget on access
    double rate_isl_bps;        // backhaul rate, half duty cycle included
    double rate_total_bps;      // isl + average of the two access rates
    PowerAllocation allocation; // split used during the s2_receiving phase
};

// Terminal SNR/SINR for the given access power. In the s2_transmitting
// phase the neighbour's wideband signal is scaled by W_F/W_T: only that
// share of it lands in the terminal's FDD sub-band.
double tdd_ue_sinr(const LinkGains& gains, double p_access_w, const SatelliteNode& s2,
                   const SpectrumPlan& spectrum, TddPhase phase);

// Neighbour SINR over the full band, with the terminal's omnidirectional
// uplink as interference.
double tdd_s2_sinr(const LinkGains& gains, double p_isl_w, const UserTerminal& ue,
                   const SpectrumPlan& spectrum);

// The two access rates: first with the split's access power and no
// interference, second with the whole budget on access (there is no
// backhaul to feed while the neighbour transmits) under interference.
std::pair<double, double> tdd_access_rates(const LinkGains& gains, const PowerAllocation& alloc,
                                           const SatelliteNode& s1, const SatelliteNode& s2,
                                           const SpectrumPlan& spectrum);

// Backhaul rate over the full band; the half factor is the TDD duty cycle.
double tdd_isl_rate(const LinkGains& gains, const PowerAllocation& alloc, const UserTerminal& ue,
                    const SpectrumPlan& spectrum);

// The split problem behind tdd_optimal_allocation (see fdd_split_problem).
// The constraint bounds the average of the two access rates from below; the
// second one is a constant here, so it turns into a closed-form floor on
// the access power.
ConcaveSplitProblem tdd_split_problem(const LinkGains& gains, const SatelliteNode& s1,
                                      const SatelliteNode& s2, const UserTerminal& ue,
                                      const SpectrumPlan& spectrum);

PowerAllocation tdd_optimal_allocation(const LinkGains& gains, const SatelliteNode& s1,
                                       const SatelliteNode& s2, const UserTerminal& ue,
                                       const SpectrumPlan& spectrum);

// Optimal split plus every SINR and rate of the scenario.
TddResult tdd_evaluate(const LinkGains& gains, const SatelliteNode& s1, const SatelliteNode& s2,
                       const UserTerminal& ue, const SpectrumPlan& spectrum);

}  // namespace leoiab
