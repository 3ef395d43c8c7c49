// SPDX-License-Identifier: Apache-2.0
//
// Parametric azimuth power patterns. A GaussianBeam main lobe is
// exp(-ln2 * (2*delta/hpbw)^2) relative to boresight, so the pattern is
// exactly one half at delta = hpbw/2. Gain is carried as metadata only.

#pragma once

#include "mpm/density.hpp"

#include <optional>
#include <string_view>

namespace mpm {

enum class AntennaKind { Omni, GaussianBeam };

struct AntennaPattern
{
    AntennaKind kind = AntennaKind::Omni;
    double hpbw_deg = 360.0;
    double gain_dbi = 0.0;
    double boresight_deg = 0.0;
    std::optional<double> sidelobe_floor_db;  // relative to boresight, e.g. -30

    static AntennaPattern omni();
    /// Throws std::invalid_argument unless 0 < hpbw < 360.
    static AntennaPattern gaussian(double hpbw_deg, double gain_dbi, double boresight_deg = 0.0);
    /// HPBW 7.8 deg, 25 dBi horn.
    static AntennaPattern narrow_beam(double boresight_deg = 0.0);
    /// HPBW 49.4 deg, 13.3 dBi horn.
    static AntennaPattern wide_beam(double boresight_deg = 0.0);

    AntennaPattern pointed_at(double boresight) const;
    bool directional() const { return kind != AntennaKind::Omni; }
};

inline constexpr double kNarrowBeamHpbwDeg = 7.8;
inline constexpr double kNarrowBeamGainDbi = 25.0;
inline constexpr double kWideBeamHpbwDeg = 49.4;
inline constexpr double kWideBeamGainDbi = 13.3;

/// Relative power gain in [0, 1] towards azimuth phi.
double power_gain(const AntennaPattern& pattern, double phi_deg);

/// The pattern normalized to a density on the circle (0.05 deg grid).
AngularDensity pattern_density(const AntennaPattern& pattern);

/// Rms angle spread of the pattern density; boresight must be zero.
double pattern_angle_spread(const AntennaPattern& pattern);

} // namespace mpm
