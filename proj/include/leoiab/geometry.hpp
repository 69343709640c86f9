#pragma once

namespace leoiab {

// One circular orbital plane with evenly spaced satellites, all at the same
// altitude. The user terminal sits at the sub-satellite point of the serving
// satellite, so its distance to that satellite equals the altitude.
struct PlaneGeometry {
    double earth_radius_m;
    double altitude_m;
    int num_satellites;
};

struct GeometrySolution {
    double d1_m;         // terminal to serving satellite (= altitude)
    double d2_m;         // terminal to neighbouring satellite
    double d_isl_m;      // serving satellite to its neighbour
    double d_isl_max_m;  // longest line-of-sight inter-satellite distance
    bool isl_visible;    // d_isl_m <= d_isl_max_m
};

// Longest inter-satellite distance whose straight line still clears the
// Earth: 2*sqrt(l*(l + 2*R)) for altitude l and Earth radius R.
double max_slant_range(double altitude_m, double earth_radius_m);

// Chord between two neighbouring satellites of an evenly populated plane:
// 2*(R + l)*sin(pi/N).
double neighbor_slant_range(const PlaneGeometry& plane);

// Fewest satellites per plane for which neighbours keep line of sight.
int min_satellites_for_isl(double altitude_m, double earth_radius_m);

// Law-of-cosines distance from the terminal to the neighbouring satellite,
// one central angle of 2*pi/N away from the serving one.
double ue_to_neighbor_distance(const PlaneGeometry& plane);

GeometrySolution solve_geometry(const PlaneGeometry& plane);

}  // namespace leoiab
