#include "leoiab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "leoiab/errors.hpp"

namespace leoiab {

namespace {

void validate(const ConcaveSplitProblem& problem) {
    if (!(problem.coef_a > 0.0) || !(problem.coef_b > 0.0)) {
        throw std::domain_error("split problem: SNR slopes must be positive");
    }
    if (!(problem.budget_w > 0.0)) {
        throw std::domain_error("split problem: budget must be positive");
    }
    if (problem.weight_a < 0.0 || problem.weight_b < 0.0) {
        throw std::domain_error("split problem: weights must be non-negative");
    }
    if (!(problem.weight_a > 0.0 || problem.weight_b > 0.0)) {
        throw std::domain_error("split problem: at least one weight must be positive");
    }
    if (problem.floor_a_w < 0.0) {
        throw std::domain_error("split problem: floor must be non-negative");
    }
    if (problem.floor_a_w > problem.budget_w) {
        throw infeasible_error("split problem: power floor exceeds the budget");
    }
}

}  // namespace

double shannon_rate_bps(double bandwidth_hz, double snr) {
    return bandwidth_hz * std::log1p(snr) * std::numbers::log2e;
}

double split_objective(const ConcaveSplitProblem& problem, double p_a_w) {
    return shannon_rate_bps(problem.weight_a, problem.coef_a * p_a_w) +
           shannon_rate_bps(problem.weight_b, problem.coef_b * (problem.budget_w - p_a_w));
}

PowerSplit solve_split(const ConcaveSplitProblem& problem) {
    validate(problem);
    // Stationary point of w_a*ln(1 + a*p) + w_b*ln(1 + b*(P - p)):
    //   w_a*a*(1 + b*(P - p)) = w_b*b*(1 + a*p)
    const double a = problem.coef_a;
    const double b = problem.coef_b;
    const double p_star =
        (problem.weight_a * a * (1.0 + b * problem.budget_w) - problem.weight_b * b) /
        (a * b * (problem.weight_a + problem.weight_b));
    const double p_a = std::clamp(p_star, problem.floor_a_w, problem.budget_w);
    return {p_a, problem.budget_w - p_a};
}

PowerSplit grid_oracle(const ConcaveSplitProblem& problem, int num_points) {
    validate(problem);
    if (num_points < 2) {
        throw std::domain_error("grid_oracle: num_points must be at least 2");
    }
    const double lo = problem.floor_a_w;
    const double hi = problem.budget_w;
    double best_p = lo;
    double best_objective = split_objective(problem, lo);
    for (int i = 1; i < num_points; ++i) {
        const double p = lo + (hi - lo) * static_cast<double>(i) / (num_points - 1);
        const double objective = split_objective(problem, p);
        if (objective > best_objective) {  // strict: ties keep the smaller p
            best_objective = objective;
            best_p = p;
        }
    }
    return {best_p, problem.budget_w - best_p};
}

double min_power_for_rate(double rate_bps, double bandwidth_hz, double snr_slope) {
    if (rate_bps < 0.0) {
        throw std::domain_error("min_power_for_rate: rate must be non-negative");
    }
    if (!(bandwidth_hz > 0.0)) {
        throw std::domain_error("min_power_for_rate: bandwidth must be positive");
    }
    if (!(snr_slope > 0.0)) {
        throw std::domain_error("min_power_for_rate: SNR slope must be positive");
    }
    if (rate_bps == 0.0) {
        return 0.0;
    }
    const double bits_per_hz = rate_bps / bandwidth_hz;
    if (bits_per_hz > 60.0) {
        throw infeasible_error(
            "min_power_for_rate: requested spectral efficiency above 60 bit/s/Hz "
            "is beyond any realizable power");
    }
    return (std::exp2(bits_per_hz) - 1.0) / snr_slope;
}

}  // namespace leoiab
