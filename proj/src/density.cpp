// SPDX-License-Identifier: Apache-2.0

#include "mpm/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpm {

AngularDensity AngularDensity::tabulate(const std::function<double(double)>& shape, double step_deg)
{
    if (!(step_deg > 0.0) || step_deg > 360.0)
        throw std::invalid_argument("grid step must be in (0, 360]");
    const auto n = static_cast<std::size_t>(std::llround(360.0 / step_deg));
    if (n == 0 || std::abs(static_cast<double>(n) * step_deg - 360.0) > 1e-9)
        throw std::invalid_argument("grid step must divide 360 degrees");

    AngularDensity d;
    d.step_ = step_deg;
    d.values_.resize(n);
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = shape(d.cell_center(i));
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("density shape must be finite and non-negative");
        d.values_[i] = v;
        mass += v;
    }
    if (!(mass > 0.0))
        throw std::invalid_argument("density shape has zero integral");

    d.cdf_.resize(n + 1);
    double running = 0.0;
    d.cdf_[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        running += d.values_[i];
        d.cdf_[i + 1] = running / mass;
        d.values_[i] /= mass * step_deg;
    }
    d.cdf_[n] = 1.0;
    return d;
}

double AngularDensity::cell_center(std::size_t i) const
{
    return -180.0 + (static_cast<double>(i) + 0.5) * step_;
}

double AngularDensity::at(double angle_deg) const
{
    auto i = static_cast<std::ptrdiff_t>(std::floor((angle_deg + 180.0) / step_));
    auto n = static_cast<std::ptrdiff_t>(values_.size());
    i = ((i % n) + n) % n;
    return values_[static_cast<std::size_t>(i)];
}

double AngularDensity::integral() const
{
    double s = 0.0;
    for (double v : values_)
        s += v * step_;
    return s;
}

double AngularDensity::sample(double u) const
{
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    auto idx = static_cast<std::size_t>(std::distance(cdf_.begin(), it));
    idx = idx == 0 ? 0 : std::min(idx - 1, values_.size() - 1);
    const double lo = cdf_[idx];
    const double width = cdf_[idx + 1] - lo;
    const double frac = width > 0.0 ? std::clamp((u - lo) / width, 0.0, 1.0) : 0.5;
    const double angle = -180.0 + (static_cast<double>(idx) + frac) * step_;
    return angle <= -180.0 ? 180.0 : angle;
}

} // namespace mpm
