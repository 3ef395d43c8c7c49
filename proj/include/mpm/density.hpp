// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mpm {

/// Piecewise-constant probability density over (-180, 180] degrees on a
/// uniform grid. values() are per degree; cell i covers
/// [-180 + i*step, -180 + (i+1)*step).
class AngularDensity
{
  public:
    static constexpr double kDefaultStepDeg = 0.05;

    /// Tabulates shape(center) at every cell center and normalizes. The shape
    /// must be non-negative with a positive integral.
    static AngularDensity tabulate(const std::function<double(double)>& shape,
                                   double step_deg = kDefaultStepDeg);

    double step_deg() const { return step_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double cell_center(std::size_t i) const;

    /// Density at an angle (value of the enclosing cell).
    double at(double angle_deg) const;

    /// Sum of value * step over the grid.
    double integral() const;

    /// Inverse CDF; u in [0, 1).
    double sample(double u) const;

  private:
    double step_ = kDefaultStepDeg;
    std::vector<double> values_;
    std::vector<double> cdf_;  // size() + 1 entries, cdf_.front() == 0
};

} // namespace mpm
