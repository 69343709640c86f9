#include "leoiab/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "leoiab/errors.hpp"
#include "leoiab/units.hpp"

namespace leoiab {

namespace {

// (4*pi*d*f/c)^2, the free-space spreading loss.
double spreading_loss(double distance_m, double carrier_hz) {
    const double factor =
        4.0 * std::numbers::pi * distance_m * carrier_hz / speed_of_light_m_per_s;
    return factor * factor;
}

}  // namespace

double free_space_gain(double distance_m, double carrier_hz, double gain_tx_linear,
                       double gain_rx_linear) {
    if (!(distance_m > 0.0)) {
        throw std::domain_error("free_space_gain: distance_m must be positive");
    }
    if (!(carrier_hz > 0.0)) {
        throw std::domain_error("free_space_gain: carrier_hz must be positive");
    }
    if (gain_tx_linear < 0.0 || gain_rx_linear < 0.0) {
        throw std::domain_error("free_space_gain: antenna gains must be non-negative");
    }
    return gain_tx_linear * gain_rx_linear / spreading_loss(distance_m, carrier_hz);
}

double isl_path_loss(double d_isl_m, double d_isl_max_m, double carrier_hz) {
    if (!(d_isl_m > 0.0) || !(d_isl_max_m > 0.0)) {
        throw std::domain_error("isl_path_loss: distances must be positive");
    }
    if (!(carrier_hz > 0.0)) {
        throw std::domain_error("isl_path_loss: carrier_hz must be positive");
    }
    if (d_isl_m > d_isl_max_m) {
        throw isl_not_visible_error(d_isl_m, d_isl_max_m);
    }
    return spreading_loss(d_isl_m, carrier_hz);
}

LinkGains link_gains(const SatelliteNode& s1, const SatelliteNode& s2, const UserTerminal& ue,
                     const PlaneGeometry& plane, const SpectrumPlan& spectrum,
                     std::optional<double> interferer_gain_linear) {
    const GeometrySolution geo = solve_geometry(plane);
    if (!geo.isl_visible) {
        throw isl_not_visible_error(geo.d_isl_m, geo.d_isl_max_m);
    }
    const double pl_isl = isl_path_loss(geo.d_isl_m, geo.d_isl_max_m, spectrum.carrier_hz);
    const double interferer_gain = interferer_gain_linear.value_or(s2.antenna_gain_linear);

    LinkGains gains;
    gains.beta_ue1 = free_space_gain(geo.d1_m, spectrum.carrier_hz, s1.antenna_gain_linear,
                                     ue.antenna_gain_linear);
    gains.beta_ue2 =
        free_space_gain(geo.d2_m, spectrum.carrier_hz, interferer_gain, ue.antenna_gain_linear);
    gains.beta_isl = s1.antenna_gain_linear * s2.antenna_gain_linear / pl_isl;
    gains.geometry = geo;
    return gains;
}

double noise_power(const SpectrumPlan& spectrum, double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0)) {
        throw std::domain_error("noise_power: bandwidth_hz must be positive");
    }
    if (!(spectrum.noise_psd_w_per_hz > 0.0)) {
        throw std::domain_error("noise_power: noise PSD must be positive");
    }
    return spectrum.noise_psd_w_per_hz * bandwidth_hz;
}

}  // namespace leoiab
