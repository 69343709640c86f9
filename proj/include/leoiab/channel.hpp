#pragma once

#include <optional>

#include "leoiab/geometry.hpp"

namespace leoiab {

// One LEO node. Gains and powers are linear SI quantities; dBi/dBm
// conversions happen at the configuration boundary.
struct SatelliteNode {
    double altitude_m;
    double antenna_gain_linear;
    double total_power_w;
};

struct UserTerminal {
    double antenna_gain_linear;
    double uplink_power_w;
    double min_access_rate_bps;
};

struct SpectrumPlan {
    double carrier_hz;
    double total_bandwidth_hz;  // full shared band (the TDD band)
    double fdd_bandwidth_hz;    // one FDD direction's share of it
    double noise_psd_w_per_hz;
};

// Linear channel gains of the three links, together with the geometry they
// were computed from. Channel coefficients are never materialised: the
// links are deterministic line-of-sight, so the squared magnitude is the
// whole story.
struct LinkGains {
    double beta_ue1;  // serving satellite -> terminal
    double beta_ue2;  // neighbour satellite -> terminal (interference path)
    double beta_isl;  // inter-satellite link
    GeometrySolution geometry;
};

// Free-space channel gain G_tx*G_rx / (4*pi*d*f/c)^2.
double free_space_gain(double distance_m, double carrier_hz, double gain_tx_linear,
                       double gain_rx_linear);

// Free-space path loss of the inter-satellite link, (4*pi*d*f/c)^2. Throws
// isl_not_visible_error past the maximum slant range, where the loss is
// unbounded.
double isl_path_loss(double d_isl_m, double d_isl_max_m, double carrier_hz);

// Gains of all three links for one scenario. interferer_gain_linear
// overrides the antenna gain used on the neighbour->terminal interference
// path (side-lobe studies); by default the neighbour's full antenna gain is
// used, which is what the plain free-space model prescribes.
LinkGains link_gains(const SatelliteNode& s1, const SatelliteNode& s2, const UserTerminal& ue,
                     const PlaneGeometry& plane, const SpectrumPlan& spectrum,
                     std::optional<double> interferer_gain_linear = std::nullopt);

// Thermal noise power N_0 * W.
double noise_power(const SpectrumPlan& spectrum, double bandwidth_hz);

}  // namespace leoiab
