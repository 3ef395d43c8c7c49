// SPDX-License-Identifier: Apache-2.0

#include "mpm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpm {

ASResult angle_spread(const PowerAngularSpectrum& pas)
{
    long double w = 0.0L, w1 = 0.0L, wsq = 0.0L;
    pas.for_each_sample([&](double a, double wt) {
        w += wt;
        w1 += static_cast<long double>(wt) * a;
        wsq += static_cast<long double>(wt) * wt;
    });
    if (!(w > 0.0L))
        throw std::domain_error("angle spread of a spectrum with zero total weight");

    const long double mean = w1 / w;
    long double var = 0.0L;
    pas.for_each_sample([&](double a, double wt) {
        const long double d = a - mean;
        var += wt * d * d;
    });
    var /= w;

    ASResult r;
    r.mean_deg = static_cast<double>(mean);
    r.sigma_deg = static_cast<double>(std::sqrt(std::max(var, 0.0L)));
    r.n_effective = static_cast<double>(w * w / wsq);
    return r;
}

double mean_angle(const PowerAngularSpectrum& pas)
{
    long double w = 0.0L, w1 = 0.0L;
    pas.for_each_sample([&](double a, double wt) {
        w += wt;
        w1 += static_cast<long double>(wt) * a;
    });
    if (!(w > 0.0L))
        throw std::domain_error("mean angle of a spectrum with zero total weight");
    return static_cast<double>(w1 / w);
}

ASResult angle_spread(const AngularDensity& density)
{
    const auto values = density.values();
    long double m0 = 0.0L, m1 = 0.0L;
    for (std::size_t i = 0; i < values.size(); ++i) {
        m0 += values[i];
        m1 += static_cast<long double>(values[i]) * density.cell_center(i);
    }
    if (!(m0 > 0.0L))
        throw std::domain_error("angle spread of an empty density");
    const long double mean = m1 / m0;
    long double var = 0.0L;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const long double d = density.cell_center(i) - mean;
        var += values[i] * d * d;
    }
    var /= m0;
    // A cell of width h carries an extra h^2/12 of within-cell variance.
    const double h = density.step_deg();
    var += static_cast<long double>(h * h / 12.0);

    ASResult r;
    r.mean_deg = static_cast<double>(mean);
    r.sigma_deg = static_cast<double>(std::sqrt(std::max(var, 0.0L)));
    r.n_effective = static_cast<double>(values.size());
    return r;
}

double MomentSums::sigma_deg() const
{
    if (!(weight > 0.0))
        throw std::domain_error("angle spread of zero total weight");
    const double m1 = first / weight;
    const double m2 = second / weight;
    return std::sqrt(std::max(m2 - m1 * m1, 0.0));
}

} // namespace mpm
