// SPDX-License-Identifier: Apache-2.0
//
// Experiment orchestration: single points, direction and delay-spread
// sweeps, and the scenario x profile x antenna comparison grids.
//
// Antenna directions alpha_T and alpha_R are given in the arrival-angle
// frame (0 deg = from the Rx towards the Tx). alpha_R = 0 therefore points
// the Rx at the Tx, and alpha_T = 180 points the Tx at the Rx.

#pragma once

#include "mpm/antenna.hpp"
#include "mpm/metrics.hpp"
#include "mpm/pas.hpp"
#include "mpm/tdl.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace mpm {

inline constexpr std::size_t kDefaultSamplesPerComponent = 200000;
inline constexpr std::size_t kMinSamplesPerComponent = 1000;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kBootstrapResamples = 50;
inline constexpr std::size_t kBootstrapBlocks = 200;

struct RunConfig
{
    ScenarioId scenario = ScenarioId::Sc1;
    TdlProfile tdl = TdlProfile::A;
    AntennaPattern tx = AntennaPattern::narrow_beam(180.0);  // boresight = alpha_T
    std::optional<AntennaPattern> rx;                         // boresight = alpha_R; empty = omni
    LocalScatterConfig local;
    std::optional<LosConfig> los;
    std::optional<double> ds_ns;       // overrides the catalog delay spread
    std::optional<double> distance_m;  // overrides the catalog distance
    std::size_t samples_per_component = kDefaultSamplesPerComponent;
    std::uint64_t seed = kDefaultSeed;
};

struct RunResult
{
    RunConfig config;
    double ds_ns = 0.0;
    double distance_m = 0.0;
    ASResult reception;
    double reception_stderr_deg = 0.0;
    std::optional<ASResult> rx_output;  // only with a directional Rx
    std::optional<double> rx_output_stderr_deg;
};

struct SweepPoint
{
    double x = 0.0;  // alpha_T [deg] or DS [ns]
    RunResult result;
};

enum class BeamType { Narrow, Wide };

struct TableCell
{
    ScenarioId scenario;
    TdlProfile tdl;
    BeamType beam;
    RunResult result;
};

struct TableOptions
{
    LocalScatterConfig local;
    std::size_t samples_per_component = kDefaultSamplesPerComponent;
    std::uint64_t seed = kDefaultSeed;
};

/// Tx pattern boresight in the departure frame for a given alpha_T.
double departure_boresight(double alpha_t_deg);

/// Seed of a point; independent of antenna direction and delay spread so
/// that sweeps share random numbers along the swept axis.
std::uint64_t point_seed(const RunConfig& cfg);

/// Throws std::invalid_argument for an unusable configuration.
void validate(const RunConfig& cfg);

class Runner
{
  public:
    explicit Runner(const std::filesystem::path& data_dir = default_data_dir());
    Runner(TapDelayLine tdl_a, TapDelayLine tdl_b);

    const TapDelayLine& profile(TdlProfile id) const;

    /// Reception-point spread, plus the Rx-output spread for a directional Rx.
    RunResult run_point(const RunConfig& cfg) const;

    /// One point per alpha_T in grid order.
    std::vector<SweepPoint> sweep_alpha_t(const RunConfig& cfg, std::span<const double> alpha_grid) const;

    /// One point per delay spread, other parameters fixed.
    std::vector<SweepPoint> sweep_ds(const RunConfig& cfg, std::span<const double> ds_list) const;

    /// 11 scenarios x {TDL-A, TDL-B} x {NBA, WBA} at alpha_T = 180 with an
    /// omnidirectional observer.
    std::vector<TableCell> table_reception(const TableOptions& opts = {}) const;

    /// Same grid with an Rx of the column's beam type at alpha_R = 0; cells
    /// carry both the reception-point and Rx-output spreads.
    std::vector<TableCell> table_rx_output(const TableOptions& opts = {}) const;

    /// Runs several configurations; results follow input order.
    std::vector<RunResult> run_many(std::span<const RunConfig> configs) const;

  private:
    std::vector<TableCell> table(const TableOptions& opts, bool with_rx) const;

    TapDelayLine tdl_a_;
    TapDelayLine tdl_b_;
};

AntennaPattern beam_pattern(BeamType beam, double boresight_deg);

} // namespace mpm
