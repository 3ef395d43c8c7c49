// SPDX-License-Identifier: Apache-2.0

#include "mpm/pas.hpp"

#include "mpm/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mpm {

double PasComponent::mass() const
{
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

PowerAngularSpectrum::PowerAngularSpectrum(std::vector<PasComponent> components)
    : components_(std::move(components))
{
    for (const auto& c : components_)
        if (c.angles_deg.size() != c.weights.size())
            throw std::invalid_argument("component angle and weight counts differ");
}

std::size_t PowerAngularSpectrum::sample_count() const
{
    std::size_t n = 0;
    for (const auto& c : components_)
        n += c.size();
    return n;
}

double PowerAngularSpectrum::total_weight() const
{
    double total = 0.0;
    for (const auto& c : components_)
        total += c.mass();
    return total;
}

void PowerAngularSpectrum::normalize()
{
    const double total = total_weight();
    if (!(total > 0.0))
        throw std::domain_error("power angular spectrum has zero total weight");
    for (auto& c : components_)
        for (auto& w : c.weights)
            w /= total;
}

double sample_von_mises(double mean_rad, double kappa, RandomStream& rng)
{
    constexpr double pi = std::numbers::pi;
    if (kappa < 1e-8)
        return mean_rad + pi * (2.0 * rng.uniform() - 1.0);

    // Best & Fisher (1979). For very large kappa the wrapped normal limit
    // avoids loss of precision in the envelope constants.
    if (kappa > 1e7) {
        double u1 = rng.uniform_open(), u2 = rng.uniform();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
        return mean_rad + z / std::sqrt(kappa);
    }
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double r = (1.0 + rho * rho) / (2.0 * rho);
    for (;;) {
        const double z = std::cos(pi * rng.uniform());
        const double f = (1.0 + r * z) / (r + z);
        const double c = kappa * (r - f);
        const double u2 = rng.uniform_open();
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
            const double theta = std::acos(std::clamp(f, -1.0, 1.0));
            return rng.uniform() < 0.5 ? mean_rad - theta : mean_rad + theta;
        }
    }
}

PasComponent local_component(const LocalScatterConfig& cfg, std::size_t n, RandomStream& rng)
{
    if (n == 0)
        throw std::invalid_argument("sample count must be positive");
    if (!(cfg.kappa >= 0.0))
        throw std::invalid_argument("von Mises kappa must be non-negative");

    PasComponent c;
    c.kind = ComponentKind::Local;
    c.angles_deg.resize(n);
    c.weights.assign(n, 1.0 / static_cast<double>(n));
    const double mean = deg_to_rad(cfg.mean_deg);
    for (auto& a : c.angles_deg)
        a = wrap_deg(rad_to_deg(sample_von_mises(mean, cfg.kappa, rng)));
    return c;
}

PasComponent delayed_component(const Ellipse& ellipse, const AngularDensity& tx_density, std::size_t n,
                               RandomStream& rng)
{
    if (n == 0)
        throw std::invalid_argument("sample count must be positive");

    PasComponent c;
    c.kind = ComponentKind::Tap;
    c.tap_index = ellipse.tap_index;
    c.angles_deg.resize(n);
    c.weights.assign(n, 1.0 / static_cast<double>(n));
    for (auto& a : c.angles_deg)
        a = departure_to_arrival(ellipse, tx_density.sample(rng.uniform()));
    return c;
}

PasComponent delayed_component(const Ellipse& ellipse, const AntennaPattern& tx_pattern, std::size_t n,
                               RandomStream& rng)
{
    return delayed_component(ellipse, pattern_density(tx_pattern), n, rng);
}

std::uint64_t component_seed(std::uint64_t base_seed, std::size_t component_index)
{
    return derive_seed(base_seed, {static_cast<std::uint64_t>(component_index)});
}

PowerAngularSpectrum compose_pas(const EllipseSet& ellipses, const AntennaPattern& tx_pattern,
                                 const LocalScatterConfig& local_cfg, const std::optional<LosConfig>& los_cfg,
                                 std::size_t n_per_component, std::uint64_t base_seed)
{
    const auto& weights = ellipses.tap_weights;
    if (weights.size() == 0)
        throw std::invalid_argument("ellipse set has no tap weights");
    if (los_cfg && !(los_cfg->rice_k >= 0.0))
        throw std::invalid_argument("Rice factor must be non-negative");

    double delayed_mass = 0.0;
    for (const auto& e : ellipses.ellipses)
        delayed_mass += weights[static_cast<std::size_t>(e.tap_index)];
    if (!(weights[0] + delayed_mass > 0.0))
        throw std::domain_error("degenerate PDP");

    std::vector<PasComponent> parts;
    parts.reserve(ellipses.ellipses.size() + 2);

    const double zero_delay_mass = weights[0];
    double local_mass = zero_delay_mass;
    if (los_cfg && los_cfg->rice_k > 0.0) {
        const double k = los_cfg->rice_k;
        PasComponent los;
        los.kind = ComponentKind::Los;
        los.angles_deg = {wrap_deg(los_cfg->angle_deg)};
        los.weights = {zero_delay_mass * k / (k + 1.0)};
        local_mass = zero_delay_mass / (k + 1.0);
        parts.push_back(std::move(los));
    }
    if (local_mass > 0.0) {
        RandomStream rng(component_seed(base_seed, 0));
        auto local = local_component(local_cfg, n_per_component, rng);
        for (auto& w : local.weights)
            w *= local_mass;
        parts.push_back(std::move(local));
    }

    if (!ellipses.ellipses.empty()) {
        const AngularDensity tx_density = pattern_density(tx_pattern);
        for (const auto& e : ellipses.ellipses) {
            const double mass = weights[static_cast<std::size_t>(e.tap_index)];
            if (!(mass > 0.0))
                continue;
            RandomStream rng(component_seed(base_seed, static_cast<std::size_t>(e.tap_index)));
            auto part = delayed_component(e, tx_density, n_per_component, rng);
            for (auto& w : part.weights)
                w *= mass;
            parts.push_back(std::move(part));
        }
    }

    PowerAngularSpectrum pas(std::move(parts));
    pas.normalize();
    return pas;
}

PowerAngularSpectrum apply_rx_pattern(const PowerAngularSpectrum& pas, const AntennaPattern& rx_pattern)
{
    const double before = pas.total_weight();
    std::vector<PasComponent> parts(pas.components().begin(), pas.components().end());
    if (rx_pattern.directional()) {
        for (auto& c : parts)
            for (std::size_t i = 0; i < c.size(); ++i)
                c.weights[i] *= power_gain(rx_pattern, c.angles_deg[i]);
    }
    PowerAngularSpectrum out(std::move(parts));
    if (!(out.total_weight() >= 1e-9 * before) || !(before > 0.0))
        throw std::domain_error("beam captures no energy");
    out.normalize();
    return out;
}

} // namespace mpm
