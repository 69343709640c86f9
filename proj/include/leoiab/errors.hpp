#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace leoiab {

// Configuration parse or validation failure. The message lists every
// violated constraint, not just the first one found.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A minimum-rate constraint that cannot be met even with the whole power
// budget on the access link. Carries the best achievable rate so callers can
// report how far off the request was.
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what,
                              double max_achievable = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(what), max_achievable_bps(max_achievable) {}

    double max_achievable_bps;
};

// The inter-satellite distance exceeds the maximum line-of-sight slant
// range, so the ISL path loss is unbounded and the scenario undefined.
// An error rather than a zero gain: silent zeros corrupt the optimizers.
class isl_not_visible_error : public std::runtime_error {
public:
    isl_not_visible_error(double d_isl, double d_isl_max)
        : std::runtime_error("ISL not visible: inter-satellite distance " +
                             std::to_string(d_isl / 1000.0) + " km exceeds the maximum slant range " +
                             std::to_string(d_isl_max / 1000.0) + " km"),
          d_isl_m(d_isl),
          d_isl_max_m(d_isl_max) {}

    double d_isl_m;
    double d_isl_max_m;
};

}  // namespace leoiab
