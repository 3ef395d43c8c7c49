// SPDX-License-Identifier: Apache-2.0
//
// Confocal single-bounce scattering ellipses. The Tx sits at (-f, 0) and the
// Rx at (+f, 0) with f = D/2.
//
// Departure angles (theta) are measured CCW at the Tx from the Tx->Rx axis;
// arrival angles (phi) are measured CCW at the Rx from the Rx->Tx axis. Both
// are in degrees and wrapped to (-180, 180].

#pragma once

#include "mpm/tdl.hpp"

#include <vector>

namespace mpm {

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

struct Ellipse
{
    double semi_major = 0.0;           // a [m]
    double semi_minor = 0.0;           // b [m]
    double focal_half_distance = 0.0;  // f = D/2 [m]
    double eccentricity = 0.0;         // f / a
    double half_excess_path = 0.0;     // a - f [m], kept separately to avoid cancellation
    int tap_index = 0;                 // position of the tap in its delay line

    Point2 tx() const { return {-focal_half_distance, 0.0}; }
    Point2 rx() const { return {focal_half_distance, 0.0}; }
};

/// Ellipse of all single-bounce points whose path exceeds the direct path
/// by c * excess_delay_ns. Throws std::domain_error for non-positive
/// distance or delay.
Ellipse make_ellipse(double distance_m, double excess_delay_ns, int tap_index);

struct EllipseSet
{
    double distance_m = 0.0;
    std::vector<Ellipse> ellipses;  // one per tap with positive delay
    NormalizedWeights tap_weights;  // every tap, including the zero-delay one
};

/// One ellipse per tap with positive delay; the zero-delay tap feeds local
/// scattering and produces none. Delays are excess delays in ns.
EllipseSet build_ellipses(const TapDelayLine& scaled_tdl, double distance_m);

/// Distance from the Tx focus to the ellipse along departure angle theta.
double focal_radius(const Ellipse& ellipse, double theta_deg);

/// Scatterer hit by a ray leaving the Tx at theta.
Point2 scatterer_position(const Ellipse& ellipse, double theta_deg);

/// Arrival angle at the Rx of the path leaving the Tx at theta.
double departure_to_arrival(const Ellipse& ellipse, double theta_deg);

} // namespace mpm
