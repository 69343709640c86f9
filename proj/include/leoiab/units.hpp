#pragma once

#include <cmath>
#include <stdexcept>

namespace leoiab {

inline constexpr double speed_of_light_m_per_s = 299792458.0;

// dB/dBm/dBi conversions. Everything internal runs in SI linear units;
// decibels exist only at the configuration boundary and in printed output.

inline double to_db(double linear) {
    if (!(linear > 0.0)) {
        throw std::domain_error("to_db: value must be positive");
    }
    return 10.0 * std::log10(linear);
}

inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watts_to_dbm(double watts) {
    if (!(watts > 0.0)) {
        throw std::domain_error("watts_to_dbm: power must be positive");
    }
    return 10.0 * std::log10(watts) + 30.0;
}

}  // namespace leoiab
