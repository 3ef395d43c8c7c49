// SPDX-License-Identifier: Apache-2.0

#include "mpm/runner.hpp"

#include "mpm/angles.hpp"
#include "mpm/geometry.hpp"
#include "mpm/parallel.hpp"
#include "mpm/random.hpp"

#include <cmath>
#include <stdexcept>

namespace mpm {

namespace {

using Blocks = std::vector<std::vector<MomentSums>>;

// Contiguous blocks of i.i.d. samples, per mixture component.
Blocks block_moments(const PowerAngularSpectrum& pas)
{
    Blocks blocks;
    for (const auto& c : pas.components()) {
        const std::size_t nb = std::min(kBootstrapBlocks, c.size());
        std::vector<MomentSums> comp(nb);
        for (std::size_t i = 0; i < c.size(); ++i)
            comp[i * nb / c.size()].add(c.angles_deg[i], c.weights[i]);
        blocks.push_back(std::move(comp));
    }
    return blocks;
}

// Stratified block bootstrap: blocks are resampled within each component so
// the mixture masses stay fixed up to within-component fluctuation.
double bootstrap_stderr(const Blocks& blocks, std::uint64_t seed)
{
    RandomStream rng(seed);
    std::vector<double> sigmas;
    sigmas.reserve(kBootstrapResamples);
    for (int r = 0; r < kBootstrapResamples; ++r) {
        MomentSums total;
        for (const auto& comp : blocks)
            for (std::size_t j = 0; j < comp.size(); ++j)
                total += comp[rng.index(comp.size())];
        sigmas.push_back(total.sigma_deg());
    }
    double mean = 0.0;
    for (double s : sigmas)
        mean += s;
    mean /= static_cast<double>(sigmas.size());
    double var = 0.0;
    for (double s : sigmas)
        var += (s - mean) * (s - mean);
    return std::sqrt(var / static_cast<double>(sigmas.size() - 1));
}

constexpr std::uint64_t kBootstrapKey = 0xb007;
constexpr std::uint64_t kRxBootstrapKey = 0xb008;

} // namespace

double departure_boresight(double alpha_t_deg)
{
    return wrap_deg(alpha_t_deg + 180.0);
}

std::uint64_t point_seed(const RunConfig& cfg)
{
    return derive_seed(cfg.seed, {static_cast<std::uint64_t>(cfg.scenario),
                                  static_cast<std::uint64_t>(cfg.tdl)});
}

void validate(const RunConfig& cfg)
{
    const auto id = static_cast<int>(cfg.scenario);
    if (id < 1 || id > static_cast<int>(scenario_catalog().size()))
        throw std::invalid_argument("scenario not in catalog");
    if (cfg.samples_per_component < kMinSamplesPerComponent)
        throw std::invalid_argument("at least 1000 samples per component are required");
    if (cfg.ds_ns && !(*cfg.ds_ns > 0.0))
        throw std::invalid_argument("delay spread must be positive");
    if (cfg.distance_m && !(*cfg.distance_m > 0.0))
        throw std::invalid_argument("distance must be positive");
    if (!(cfg.local.kappa >= 0.0))
        throw std::invalid_argument("von Mises kappa must be non-negative");
    if (cfg.los && !(cfg.los->rice_k >= 0.0))
        throw std::invalid_argument("Rice factor must be non-negative");
}

AntennaPattern beam_pattern(BeamType beam, double boresight_deg)
{
    return beam == BeamType::Narrow ? AntennaPattern::narrow_beam(boresight_deg)
                                    : AntennaPattern::wide_beam(boresight_deg);
}

Runner::Runner(const std::filesystem::path& data_dir)
    : tdl_a_(load_tdl_profile(TdlProfile::A, data_dir)), tdl_b_(load_tdl_profile(TdlProfile::B, data_dir))
{
}

Runner::Runner(TapDelayLine tdl_a, TapDelayLine tdl_b) : tdl_a_(std::move(tdl_a)), tdl_b_(std::move(tdl_b))
{
    if (tdl_a_.profile() != TdlProfile::A || tdl_b_.profile() != TdlProfile::B)
        throw std::invalid_argument("profiles passed in the wrong order");
}

const TapDelayLine& Runner::profile(TdlProfile id) const
{
    return id == TdlProfile::A ? tdl_a_ : tdl_b_;
}

RunResult Runner::run_point(const RunConfig& cfg) const
{
    validate(cfg);
    const Scenario& scenario = find_scenario(cfg.scenario);

    RunResult result;
    result.config = cfg;
    result.ds_ns = cfg.ds_ns.value_or(scenario.ds_ns);
    result.distance_m = cfg.distance_m.value_or(scenario.distance_m);

    const auto ellipses = build_ellipses(scale_delays(profile(cfg.tdl), result.ds_ns), result.distance_m);
    const auto tx = cfg.tx.pointed_at(departure_boresight(cfg.tx.boresight_deg));
    const auto seed = point_seed(cfg);
    const auto pas = compose_pas(ellipses, tx, cfg.local, cfg.los, cfg.samples_per_component, seed);

    result.reception = angle_spread(pas);
    result.reception_stderr_deg = bootstrap_stderr(block_moments(pas), derive_seed(seed, {kBootstrapKey}));

    if (cfg.rx && cfg.rx->directional()) {
        const auto filtered = apply_rx_pattern(pas, *cfg.rx);
        result.rx_output = angle_spread(filtered);
        result.rx_output_stderr_deg =
            bootstrap_stderr(block_moments(filtered), derive_seed(seed, {kRxBootstrapKey}));
    }
    return result;
}

std::vector<RunResult> Runner::run_many(std::span<const RunConfig> configs) const
{
    std::vector<RunResult> results(configs.size());
    parallel_for(configs.size(), [&](std::size_t i) { results[i] = run_point(configs[i]); });
    return results;
}

std::vector<SweepPoint> Runner::sweep_alpha_t(const RunConfig& cfg, std::span<const double> alpha_grid) const
{
    if (alpha_grid.empty())
        throw std::invalid_argument("alpha_T grid is empty");
    std::vector<RunConfig> configs;
    for (double alpha : alpha_grid) {
        RunConfig c = cfg;
        c.tx = cfg.tx.pointed_at(alpha);
        configs.push_back(c);
    }
    auto results = run_many(configs);
    std::vector<SweepPoint> out;
    for (std::size_t i = 0; i < results.size(); ++i)
        out.push_back({alpha_grid[i], std::move(results[i])});
    return out;
}

std::vector<SweepPoint> Runner::sweep_ds(const RunConfig& cfg, std::span<const double> ds_list) const
{
    if (ds_list.empty())
        throw std::invalid_argument("delay spread list is empty");
    std::vector<RunConfig> configs;
    for (double ds : ds_list) {
        if (!(ds > 0.0))
            throw std::invalid_argument("delay spreads must be positive");
        RunConfig c = cfg;
        c.ds_ns = ds;
        configs.push_back(c);
    }
    auto results = run_many(configs);
    std::vector<SweepPoint> out;
    for (std::size_t i = 0; i < results.size(); ++i)
        out.push_back({ds_list[i], std::move(results[i])});
    return out;
}

std::vector<TableCell> Runner::table(const TableOptions& opts, bool with_rx) const
{
    std::vector<TableCell> cells;
    std::vector<RunConfig> configs;
    for (const auto& s : scenario_catalog()) {
        for (auto tdl : {TdlProfile::A, TdlProfile::B}) {
            for (auto beam : {BeamType::Narrow, BeamType::Wide}) {
                RunConfig c;
                c.scenario = s.id;
                c.tdl = tdl;
                c.tx = beam_pattern(beam, 180.0);
                if (with_rx)
                    c.rx = beam_pattern(beam, 0.0);
                c.local = opts.local;
                c.samples_per_component = opts.samples_per_component;
                c.seed = opts.seed;
                configs.push_back(c);
                cells.push_back({s.id, tdl, beam, {}});
            }
        }
    }
    auto results = run_many(configs);
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i].result = std::move(results[i]);
    return cells;
}

std::vector<TableCell> Runner::table_reception(const TableOptions& opts) const
{
    return table(opts, false);
}

std::vector<TableCell> Runner::table_rx_output(const TableOptions& opts) const
{
    return table(opts, true);
}

} // namespace mpm
