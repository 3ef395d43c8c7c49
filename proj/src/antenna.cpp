// SPDX-License-Identifier: Apache-2.0

#include "mpm/antenna.hpp"

#include "mpm/angles.hpp"
#include "mpm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mpm {

AntennaPattern AntennaPattern::omni()
{
    return AntennaPattern{};
}

AntennaPattern AntennaPattern::gaussian(double hpbw_deg, double gain_dbi, double boresight_deg)
{
    if (!(hpbw_deg > 0.0 && hpbw_deg < 360.0))
        throw std::invalid_argument("HPBW must lie in (0, 360) degrees");
    AntennaPattern p;
    p.kind = AntennaKind::GaussianBeam;
    p.hpbw_deg = hpbw_deg;
    p.gain_dbi = gain_dbi;
    p.boresight_deg = wrap_deg(boresight_deg);
    return p;
}

AntennaPattern AntennaPattern::narrow_beam(double boresight_deg)
{
    return gaussian(kNarrowBeamHpbwDeg, kNarrowBeamGainDbi, boresight_deg);
}

AntennaPattern AntennaPattern::wide_beam(double boresight_deg)
{
    return gaussian(kWideBeamHpbwDeg, kWideBeamGainDbi, boresight_deg);
}

AntennaPattern AntennaPattern::pointed_at(double boresight) const
{
    AntennaPattern p = *this;
    p.boresight_deg = wrap_deg(boresight);
    return p;
}

double power_gain(const AntennaPattern& pattern, double phi_deg)
{
    if (pattern.kind == AntennaKind::Omni)
        return 1.0;
    const double delta = wrap_deg(phi_deg - pattern.boresight_deg);
    const double x = 2.0 * delta / pattern.hpbw_deg;
    double g = std::exp(-std::numbers::ln2 * x * x);
    if (pattern.sidelobe_floor_db)
        g = std::max(g, std::pow(10.0, *pattern.sidelobe_floor_db / 10.0));
    return g;
}

AngularDensity pattern_density(const AntennaPattern& pattern)
{
    return AngularDensity::tabulate([&](double phi) { return power_gain(pattern, phi); });
}

double pattern_angle_spread(const AntennaPattern& pattern)
{
    if (pattern.directional() && pattern.boresight_deg != 0.0)
        throw std::invalid_argument("pattern angle spread is defined for boresight 0");
    return angle_spread(pattern_density(pattern)).sigma_deg;
}

} // namespace mpm
