// SPDX-License-Identifier: Apache-2.0

#include "mpm/geometry.hpp"

#include "mpm/angles.hpp"

#include <cmath>
#include <stdexcept>

namespace mpm {

Ellipse make_ellipse(double distance_m, double excess_delay_ns, int tap_index)
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw std::domain_error("Tx-Rx distance must be positive");
    if (!(excess_delay_ns > 0.0) || !std::isfinite(excess_delay_ns))
        throw std::domain_error("excess delay must be positive");

    const double excess_path = kSpeedOfLight * excess_delay_ns * 1e-9;
    Ellipse e;
    e.focal_half_distance = distance_m / 2.0;
    e.half_excess_path = excess_path / 2.0;
    e.semi_major = (distance_m + excess_path) / 2.0;
    // b^2 = a^2 - f^2 = (a - f)(a + f)
    e.semi_minor = std::sqrt(e.half_excess_path * (e.semi_major + e.focal_half_distance));
    e.eccentricity = e.focal_half_distance / e.semi_major;
    e.tap_index = tap_index;
    return e;
}

EllipseSet build_ellipses(const TapDelayLine& scaled_tdl, double distance_m)
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw std::domain_error("Tx-Rx distance must be positive");

    EllipseSet set;
    set.distance_m = distance_m;
    set.tap_weights = normalize_powers(scaled_tdl);
    for (std::size_t i = 0; i < scaled_tdl.size(); ++i) {
        double delay = scaled_tdl[i].delay;
        if (delay < 0.0)
            throw std::domain_error("negative tap delay");
        if (delay == 0.0)
            continue;
        set.ellipses.push_back(make_ellipse(distance_m, delay, static_cast<int>(i)));
    }
    return set;
}

double focal_radius(const Ellipse& ellipse, double theta_deg)
{
    // r = a(1 - e^2) / (1 - e cos(theta)) = b^2 / (a - f cos(theta)), with
    // a - f cos(theta) = (a - f) + 2 f sin^2(theta / 2).
    const double s = std::sin(deg_to_rad(theta_deg) / 2.0);
    const double denom = ellipse.half_excess_path + 2.0 * ellipse.focal_half_distance * s * s;
    return ellipse.semi_minor * ellipse.semi_minor / denom;
}

Point2 scatterer_position(const Ellipse& ellipse, double theta_deg)
{
    const double theta = deg_to_rad(theta_deg);
    const double r = focal_radius(ellipse, theta_deg);
    return {-ellipse.focal_half_distance + r * std::cos(theta), r * std::sin(theta)};
}

double departure_to_arrival(const Ellipse& ellipse, double theta_deg)
{
    const Point2 s = scatterer_position(ellipse, theta_deg);
    // Rx->S rotated by 180 degrees so that zero points back at the Tx.
    const double phi = rad_to_deg(std::atan2(-s.y, ellipse.focal_half_distance - s.x));
    return phi == -180.0 ? 180.0 : phi;
}

} // namespace mpm
