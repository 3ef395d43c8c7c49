// SPDX-License-Identifier: Apache-2.0
//
// Power angular spectrum at the reception point, represented as weighted
// arrival-angle samples grouped by the mechanism that produced them.

#pragma once

#include "mpm/antenna.hpp"
#include "mpm/geometry.hpp"
#include "mpm/random.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mpm {

enum class ComponentKind { Local, Tap, Los };

struct PasComponent
{
    ComponentKind kind = ComponentKind::Local;
    int tap_index = -1;  // delay-line position for Tap components
    std::vector<double> angles_deg;
    std::vector<double> weights;

    std::size_t size() const { return angles_deg.size(); }
    double mass() const;
};

class PowerAngularSpectrum
{
  public:
    PowerAngularSpectrum() = default;
    explicit PowerAngularSpectrum(std::vector<PasComponent> components);

    std::span<const PasComponent> components() const { return components_; }
    std::size_t sample_count() const;
    double total_weight() const;

    /// Rescales all weights to unit total. Throws std::domain_error on zero mass.
    void normalize();

    /// Calls fn(angle, weight) for every sample in component order.
    template <typename Fn>
    void for_each_sample(Fn&& fn) const
    {
        for (const auto& c : components_)
            for (std::size_t i = 0; i < c.size(); ++i)
                fn(c.angles_deg[i], c.weights[i]);
    }

  private:
    std::vector<PasComponent> components_;
};

struct LocalScatterConfig
{
    double kappa = 50.0;  // von Mises concentration
    double mean_deg = 0.0;
};

struct LosConfig
{
    double rice_k = 0.0;  // linear
    double angle_deg = 0.0;
};

/// One von Mises variate (radians), Best-Fisher rejection sampler.
double sample_von_mises(double mean_rad, double kappa, RandomStream& rng);

/// n equal-weight samples of the local-scattering von Mises density; total
/// mass 1.
PasComponent local_component(const LocalScatterConfig& cfg, std::size_t n, RandomStream& rng);

/// n equal-weight arrival angles: departures drawn from the Tx pattern
/// density (boresight in the departure frame) and mapped through the
/// ellipse. Total mass 1.
PasComponent delayed_component(const Ellipse& ellipse, const AntennaPattern& tx_pattern, std::size_t n,
                               RandomStream& rng);

/// Same, with a precomputed Tx pattern density.
PasComponent delayed_component(const Ellipse& ellipse, const AngularDensity& tx_density, std::size_t n,
                               RandomStream& rng);

/// Seed of the independent stream used for one mixture component.
/// Component 0 is local scattering, k >= 1 the tap at delay-line position k.
std::uint64_t component_seed(std::uint64_t base_seed, std::size_t component_index);

/// Mixture of local scattering (zero-delay tap), one delayed component per
/// ellipse and an optional LOS atom. Component masses equal the normalized
/// tap powers; with LOS the zero-delay mass is split K/(K+1) : 1/(K+1)
/// between the direct path and local scattering.
PowerAngularSpectrum compose_pas(const EllipseSet& ellipses, const AntennaPattern& tx_pattern,
                                 const LocalScatterConfig& local_cfg, const std::optional<LosConfig>& los_cfg,
                                 std::size_t n_per_component, std::uint64_t base_seed);

/// Weights every sample by the Rx power gain and renormalizes. Throws
/// std::domain_error("beam captures no energy") when less than 1e-9 of the
/// input weight survives.
PowerAngularSpectrum apply_rx_pattern(const PowerAngularSpectrum& pas, const AntennaPattern& rx_pattern);

} // namespace mpm
