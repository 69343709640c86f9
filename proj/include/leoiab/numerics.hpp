#pragma once

namespace leoiab {

// maximize  w_a*log2(1 + a*p) + w_b*log2(1 + b*(P - p))  over p in [floor, P].
//
// Common shape of both duplexing optimizations: two Shannon terms competing
// for one transmit-power budget, with a minimum-rate floor on the first
// link's power.
struct ConcaveSplitProblem {
    double weight_a;  // bandwidth multiplying the first log, Hz
    double coef_a;    // SNR per watt on the first link, 1/W
    double weight_b;
    double coef_b;
    double budget_w;
    double floor_a_w = 0.0;
};

struct PowerSplit {
    double p_a_w;
    double p_b_w;
};

// W * log2(1 + snr), through log1p so small SNRs keep precision.
double shannon_rate_bps(double bandwidth_hz, double snr);

// Objective of the split problem at a given first-link power.
double split_objective(const ConcaveSplitProblem& problem, double p_a_w);

// Exact maximizer: the stationary point clamped to [floor, budget]. The
// budget is always spent in full, since the objective is strictly
// increasing in each power.
PowerSplit solve_split(const ConcaveSplitProblem& problem);

// Exhaustive search over a uniform num_points grid on [floor, budget],
// ties broken toward smaller p_a. Verification oracle for solve_split;
// shares no code with the closed form beyond the objective itself.
PowerSplit grid_oracle(const ConcaveSplitProblem& problem, int num_points);

// Smallest power at which W*log2(1 + a*p) reaches rate_bps: (2^(R/W) - 1)/a.
double min_power_for_rate(double rate_bps, double bandwidth_hz, double snr_slope);

}  // namespace leoiab
