// SPDX-License-Identifier: Apache-2.0
//
// Rms angle spread as the square root of the second central moment of the
// arrival-angle density, with plain (non-circular) moments of angles wrapped
// to (-180, 180]. Mass sitting near +-180 deg therefore inflates the spread;
// mean_deg is reported so callers can spot such cases.

#pragma once

#include "mpm/density.hpp"
#include "mpm/pas.hpp"

namespace mpm {

struct ASResult
{
    double sigma_deg = 0.0;
    double mean_deg = 0.0;
    double n_effective = 0.0;  // Kish effective sample size
};

/// Throws std::domain_error on zero total weight.
ASResult angle_spread(const PowerAngularSpectrum& pas);
double mean_angle(const PowerAngularSpectrum& pas);

/// Midpoint-rule moments of a gridded density. n_effective is the cell count.
ASResult angle_spread(const AngularDensity& density);

/// Running zeroth, first and second weighted moments; mergeable.
struct MomentSums
{
    double weight = 0.0;
    double first = 0.0;
    double second = 0.0;

    void add(double angle_deg, double w)
    {
        weight += w;
        first += w * angle_deg;
        second += w * angle_deg * angle_deg;
    }
    MomentSums& operator+=(const MomentSums& o)
    {
        weight += o.weight;
        first += o.first;
        second += o.second;
        return *this;
    }

    /// One-pass spread; adequate for resampling, not for exact zeros.
    double sigma_deg() const;
};

} // namespace mpm
