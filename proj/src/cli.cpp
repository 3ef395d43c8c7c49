// SPDX-License-Identifier: Apache-2.0

#include "mpm/cli.hpp"

#include "mpm/records.hpp"
#include "mpm/runner.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mpm {

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Flags
{
    std::string scenario;
    std::string tdl = "TDL-A";
    std::string tx = "nba";
    double tx_hpbw = 0.0;
    double alpha_t = 180.0;
    std::string rx = "omni";
    double rx_hpbw = 0.0;
    double alpha_r = 0.0;
    double kappa = LocalScatterConfig{}.kappa;
    double mu = 0.0;
    double rice_k = 0.0;
    std::size_t samples = kDefaultSamplesPerComponent;
    std::uint64_t seed = kDefaultSeed;
    std::string grid;
    std::vector<double> ds_ns;
    double distance_m = 0.0;
    std::string format = "csv";
    std::string output;

    // table / plotdata
    std::string which = "reception";
    int figure = 0;
    std::string out_dir = ".";
    std::string input;
    std::string x_axis = "alpha";

    CLI::Option* tx_hpbw_opt = nullptr;
    CLI::Option* rx_hpbw_opt = nullptr;
    CLI::Option* rice_k_opt = nullptr;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* ds_opt = nullptr;
    CLI::Option* distance_opt = nullptr;
    CLI::Option* scenario_opt = nullptr;
};

double parse_number(std::string_view s)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw std::invalid_argument("bad number '" + std::string(s) + "'");
    return v;
}

AntennaPattern make_antenna(const std::string& kind, bool hpbw_given, double hpbw, double boresight,
                            const char* which)
{
    const std::string hpbw_flag = std::string("--") + which + "-hpbw";
    if (kind != "custom" && hpbw_given)
        throw UsageError(hpbw_flag + " requires --" + which + " custom");
    if (kind == "nba")
        return AntennaPattern::narrow_beam(boresight);
    if (kind == "wba")
        return AntennaPattern::wide_beam(boresight);
    if (kind == "omni")
        return AntennaPattern::omni();
    if (!hpbw_given)
        throw UsageError("--" + std::string(which) + " custom requires " + hpbw_flag);
    if (!(hpbw > 0.0 && hpbw < 360.0))
        throw UsageError(hpbw_flag + " must lie in (0, 360)");
    return AntennaPattern::gaussian(hpbw, 0.0, boresight);
}

RunConfig base_config(const Flags& f, bool need_scenario)
{
    RunConfig cfg;
    if (need_scenario && f.scenario.empty())
        throw UsageError("--scenario is required");
    try {
        if (!f.scenario.empty())
            cfg.scenario = parse_scenario_id(f.scenario);
        cfg.tdl = parse_tdl_profile(f.tdl);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    cfg.tx = make_antenna(f.tx, f.tx_hpbw_opt->count() > 0, f.tx_hpbw, f.alpha_t, "tx");
    if (f.rx != "omni")
        cfg.rx = make_antenna(f.rx, f.rx_hpbw_opt->count() > 0, f.rx_hpbw, f.alpha_r, "rx");
    else if (f.rx_hpbw_opt->count() > 0)
        throw UsageError("--rx-hpbw requires --rx custom");
    if (!(f.kappa >= 0.0))
        throw UsageError("--kappa must be non-negative");
    cfg.local = {f.kappa, f.mu};
    if (f.rice_k_opt->count() > 0) {
        if (!(f.rice_k >= 0.0))
            throw UsageError("--rice-k must be non-negative");
        cfg.los = LosConfig{f.rice_k, 0.0};
    }
    if (f.distance_opt->count() > 0) {
        if (!(f.distance_m > 0.0))
            throw UsageError("--distance-m must be positive");
        cfg.distance_m = f.distance_m;
    }
    if (f.samples < kMinSamplesPerComponent)
        throw UsageError("--samples must be at least " + std::to_string(kMinSamplesPerComponent));
    cfg.samples_per_component = f.samples;
    cfg.seed = f.seed;
    return cfg;
}

std::vector<double> grid_or(const Flags& f, std::string_view fallback)
{
    try {
        return parse_grid(f.grid_opt->count() > 0 ? std::string_view(f.grid) : fallback);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--grid: ") + e.what());
    }
}

std::vector<double> ds_list(const Flags& f, const Scenario& family_of)
{
    if (f.ds_opt->count() > 0) {
        for (double ds : f.ds_ns)
            if (!(ds > 0.0))
                throw UsageError("--ds-ns values must be positive");
        return f.ds_ns;
    }
    if (f.grid_opt->count() > 0)
        return grid_or(f, "");
    std::vector<double> out;
    for (const auto& s : scenarios_in(family_of.environment))
        out.push_back(s.ds_ns);
    return out;
}

void emit(const Flags& f, const std::vector<OutputRecord>& records, std::ostream& out)
{
    auto write = [&](std::ostream& os) {
        if (f.format == "jsonl")
            write_jsonl(os, records);
        else
            write_csv(os, records);
    };
    if (f.output.empty()) {
        write(out);
        return;
    }
    std::ofstream file(f.output, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + f.output + " for writing");
    write(file);
    if (!file)
        throw std::runtime_error("write to " + f.output + " failed");
}

std::vector<OutputRecord> cmd_run(const Flags& f, const Runner& runner)
{
    const auto cfg = base_config(f, true);
    return {make_record(runner.run_point(cfg))};
}

std::vector<OutputRecord> cmd_sweep_alpha(const Flags& f, const Runner& runner)
{
    const auto cfg = base_config(f, true);
    const auto grid = grid_or(f, "0:180:5");
    std::vector<OutputRecord> records;
    for (const auto& p : runner.sweep_alpha_t(cfg, grid))
        records.push_back(make_record(p.result, p.x));
    return records;
}

std::vector<OutputRecord> cmd_sweep_ds(const Flags& f, const Runner& runner)
{
    const auto cfg = base_config(f, true);
    const auto list = ds_list(f, find_scenario(cfg.scenario));
    std::vector<OutputRecord> records;
    for (const auto& p : runner.sweep_ds(cfg, list))
        records.push_back(make_record(p.result));
    return records;
}

std::vector<OutputRecord> cmd_table(const Flags& f, const Runner& runner)
{
    if (f.which != "reception" && f.which != "rx-output")
        throw UsageError("--which must be reception or rx-output");
    const auto cfg = base_config(f, false);
    TableOptions opts;
    opts.local = cfg.local;
    opts.samples_per_component = cfg.samples_per_component;
    opts.seed = cfg.seed;
    const auto cells = f.which == "reception" ? runner.table_reception(opts) : runner.table_rx_output(opts);
    std::vector<OutputRecord> records;
    for (const auto& c : cells)
        records.push_back(make_record(c.result));
    return records;
}

// --- plot data ---------------------------------------------------------------

using Curve = std::vector<std::pair<double, double>>;

std::filesystem::path write_curve(const std::filesystem::path& dir, const std::string& name, const Curve& curve)
{
    const auto path = dir / name;
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (const auto& [x, y] : curve)
        file << format_fixed(x, 6) << ' ' << format_fixed(y, 6) << '\n';
    if (!file)
        throw std::runtime_error("write to " + path.string() + " failed");
    return path;
}

std::string fig_prefix(int figure)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "fig%02d_", figure);
    return buf;
}

std::map<std::string, Curve> figure_curves(const Flags& f, const Runner& runner)
{
    static constexpr Environment kEnvs[] = {Environment::IndoorOffice, Environment::UMiStreetCanyon,
                                            Environment::UMa, Environment::O2I};
    RunConfig cfg = base_config(f, false);
    cfg.rx.reset();
    const std::string tdl(to_string(cfg.tdl));
    std::map<std::string, Curve> curves;

    if (f.figure >= 2 && f.figure <= 9) {
        const Environment env = kEnvs[(f.figure - 2) / 2];
        const bool narrow = f.figure % 2 == 0;
        cfg.tx = beam_pattern(narrow ? BeamType::Narrow : BeamType::Wide, 0.0);
        const auto grid = grid_or(f, "0:180:5");
        for (const auto& s : scenarios_in(env)) {
            cfg.scenario = s.id;
            Curve curve;
            for (const auto& p : runner.sweep_alpha_t(cfg, grid))
                curve.emplace_back(std::abs(p.x), p.result.reception.sigma_deg);
            curves[fig_prefix(f.figure) + to_string(s.id) + "_" + tdl + "_" + (narrow ? "nba" : "wba") + ".dat"] =
                std::move(curve);
        }
        return curves;
    }
    if (f.figure == 10) {
        std::vector<double> list;
        if (f.ds_opt->count() > 0 || f.grid_opt->count() > 0)
            list = ds_list(f, scenario_catalog().front());
        else
            list = parse_grid("20:800:20");
        for (auto env : kEnvs) {
            cfg.scenario = scenarios_in(env).front().id;
            Curve curve;
            for (const auto& p : runner.sweep_ds(cfg, list))
                curve.emplace_back(p.x, p.result.reception.sigma_deg);
            curves[fig_prefix(10) + std::string(to_string(env)) + "_" + tdl + "_" + antenna_label(cfg.tx) + ".dat"] =
                std::move(curve);
        }
        return curves;
    }
    throw UsageError("--figure must be between 2 and 10");
}

std::map<std::string, Curve> file_curves(const Flags& f)
{
    if (f.x_axis != "alpha" && f.x_axis != "ds")
        throw UsageError("--x must be alpha or ds");
    std::ifstream file(f.input, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open " + f.input);
    const auto records = read_csv(file);
    if (records.empty())
        throw std::runtime_error("no records in " + f.input);
    std::map<std::string, Curve> curves;
    for (const auto& r : records) {
        if (f.x_axis == "alpha")
            curves[r.scenario + "_" + r.tdl + "_" + r.tx_kind + ".dat"].emplace_back(std::abs(r.alpha_t_deg),
                                                                                     r.as_reception_deg);
        else
            curves[r.environment + "_" + r.tdl + "_" + r.tx_kind + ".dat"].emplace_back(r.ds_ns,
                                                                                        r.as_reception_deg);
    }
    return curves;
}

void cmd_plotdata(const Flags& f, const Runner* runner, CLI::Option* figure_opt, CLI::Option* input_opt,
                  std::ostream& out)
{
    const bool inline_mode = figure_opt->count() > 0;
    if (inline_mode == (input_opt->count() > 0))
        throw UsageError("plotdata needs exactly one of --figure or --input");
    const auto curves = inline_mode ? figure_curves(f, *runner) : file_curves(f);
    if (curves.empty())
        throw std::runtime_error("nothing to plot");
    const std::filesystem::path dir(f.out_dir);
    std::filesystem::create_directories(dir);
    for (const auto& [name, curve] : curves)
        out << write_curve(dir, name, curve).string() << '\n';
}

} // namespace

std::vector<double> parse_grid(std::string_view text)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
        throw std::invalid_argument("expected a:b:step");
    const double a = parse_number(text.substr(0, c1));
    const double b = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_number(text.substr(c2 + 1));
    if (!(step > 0.0))
        throw std::invalid_argument("step must be positive");
    if (b < a)
        throw std::invalid_argument("end lies before start");
    const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = a + static_cast<double>(i) * step;
    return grid;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Flags f;
    CLI::App app{"Multi-elliptical angle-spread simulator", "mpmsim"};
    app.set_config("--config", "", "key=value file presetting any option; flags override it");
    app.require_subcommand(1);
    app.fallthrough();

    f.scenario_opt = app.add_option("--scenario", f.scenario, "Scenario Sc1..Sc11");
    app.add_option("--tdl", f.tdl, "TDL-A or TDL-B")->capture_default_str();
    app.add_option("--tx", f.tx, "Tx antenna")->check(CLI::IsMember({"nba", "wba", "omni", "custom"}))
        ->capture_default_str();
    f.tx_hpbw_opt = app.add_option("--tx-hpbw", f.tx_hpbw, "HPBW of a custom Tx beam [deg]");
    app.add_option("--alpha-t", f.alpha_t, "Tx direction [deg]")->capture_default_str();
    app.add_option("--rx", f.rx, "Rx antenna")->check(CLI::IsMember({"nba", "wba", "omni", "custom"}))
        ->capture_default_str();
    f.rx_hpbw_opt = app.add_option("--rx-hpbw", f.rx_hpbw, "HPBW of a custom Rx beam [deg]");
    app.add_option("--alpha-r", f.alpha_r, "Rx direction [deg]")->capture_default_str();
    app.add_option("--kappa", f.kappa, "von Mises concentration of local scattering")->capture_default_str();
    app.add_option("--mu", f.mu, "Mean direction of local scattering [deg]")->capture_default_str();
    f.rice_k_opt = app.add_option("--rice-k", f.rice_k, "Rice factor (linear); enables a LOS path");
    app.add_option("--samples", f.samples, "Samples per mixture component")->capture_default_str();
    app.add_option("--seed", f.seed, "Base seed")->capture_default_str();
    f.grid_opt = app.add_option("--grid", f.grid, "Sweep grid a:b:step (inclusive)");
    f.ds_opt = app.add_option("--ds-ns", f.ds_ns, "Delay spreads [ns]")->delimiter(',');
    f.distance_opt = app.add_option("--distance-m", f.distance_m, "Tx-Rx distance [m]");
    app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    app.add_option("--output", f.output, "Output path (default stdout)");

    auto* run = app.add_subcommand("run", "Evaluate one point");
    auto* sweep_alpha = app.add_subcommand("sweep-alpha", "Sweep the Tx direction (default grid 0:180:5)");
    auto* sweep_ds = app.add_subcommand("sweep-ds", "Sweep the delay spread");
    auto* table = app.add_subcommand("table", "Scenario x profile x antenna grid at alpha_T = 180");
    table->add_option("--which", f.which, "reception or rx-output")
        ->check(CLI::IsMember({"reception", "rx-output"}))
        ->capture_default_str();
    auto* plot = app.add_subcommand("plotdata", "Write two-column plot files");
    auto* figure_opt = plot->add_option("--figure", f.figure, "Figure to compute inline (2..10)")
                           ->check(CLI::Range(2, 10));
    auto* input_opt = plot->add_option("--input", f.input, "CSV written by a sweep");
    plot->add_option("--x", f.x_axis, "Abscissa of --input curves: alpha or ds")
        ->check(CLI::IsMember({"alpha", "ds"}))
        ->capture_default_str();
    plot->add_option("--out-dir", f.out_dir, "Directory for the .dat files")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (plot->parsed()) {
            if (input_opt->count() > 0) {
                cmd_plotdata(f, nullptr, figure_opt, input_opt, out);
            } else {
                const Runner runner;
                cmd_plotdata(f, &runner, figure_opt, input_opt, out);
            }
            return kExitOk;
        }
        std::vector<OutputRecord> records;
        const Runner runner;
        if (run->parsed())
            records = cmd_run(f, runner);
        else if (sweep_alpha->parsed())
            records = cmd_sweep_alpha(f, runner);
        else if (sweep_ds->parsed())
            records = cmd_sweep_ds(f, runner);
        else if (table->parsed())
            records = cmd_table(f, runner);
        emit(f, records, out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << "Run with --help for more information.\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace mpm
