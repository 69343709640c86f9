#include "leoiab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leoiab {

namespace {

void check_orbit(double altitude_m, double earth_radius_m) {
    if (!(altitude_m > 0.0)) {
        throw std::domain_error("geometry: altitude_m must be positive");
    }
    if (!(earth_radius_m > 0.0)) {
        throw std::domain_error("geometry: earth_radius_m must be positive");
    }
}

}  // namespace

double max_slant_range(double altitude_m, double earth_radius_m) {
    check_orbit(altitude_m, earth_radius_m);
    return 2.0 * std::sqrt(altitude_m * (altitude_m + 2.0 * earth_radius_m));
}

double neighbor_slant_range(const PlaneGeometry& plane) {
    check_orbit(plane.altitude_m, plane.earth_radius_m);
    if (plane.num_satellites < 2) {
        throw std::domain_error("geometry: num_satellites must be at least 2");
    }
    return 2.0 * (plane.earth_radius_m + plane.altitude_m) *
           std::sin(std::numbers::pi / plane.num_satellites);
}

int min_satellites_for_isl(double altitude_m, double earth_radius_m) {
    const double d_max = max_slant_range(altitude_m, earth_radius_m);
    const double orbit_radius_m = earth_radius_m + altitude_m;
    // The argument is always < 1: d_max^2 = 4*l*(l + 2*R) < 4*(R + l)^2.
    const double half_angle = std::asin(d_max / (2.0 * orbit_radius_m));
    const double count = std::numbers::pi / half_angle;
    // Ceiling with a guard so a mathematically exact integer is not bumped
    // up by floating-point noise.
    const double nearest = std::round(count);
    if (std::abs(count - nearest) <= 1e-9 * count) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::ceil(count));
}

double ue_to_neighbor_distance(const PlaneGeometry& plane) {
    check_orbit(plane.altitude_m, plane.earth_radius_m);
    if (plane.num_satellites < 2) {
        throw std::domain_error("geometry: num_satellites must be at least 2");
    }
    const double r_orbit = plane.earth_radius_m + plane.altitude_m;
    const double r_earth = plane.earth_radius_m;
    const double central_angle = 2.0 * std::numbers::pi / plane.num_satellites;
    return std::sqrt(r_orbit * r_orbit + r_earth * r_earth -
                     2.0 * r_orbit * r_earth * std::cos(central_angle));
}

GeometrySolution solve_geometry(const PlaneGeometry& plane) {
    GeometrySolution sol;
    sol.d1_m = plane.altitude_m;
    sol.d2_m = ue_to_neighbor_distance(plane);
    sol.d_isl_m = neighbor_slant_range(plane);
    sol.d_isl_max_m = max_slant_range(plane.altitude_m, plane.earth_radius_m);
    sol.isl_visible = sol.d_isl_m <= sol.d_isl_max_m;
    return sol;
}

}  // namespace leoiab
