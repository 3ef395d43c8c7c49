// SPDX-License-Identifier: Apache-2.0

#include "mpm/cli.hpp"
#include "mpm/records.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace mpm;

namespace {

struct Outcome
{
    int code = -1;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "mpmsim");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::vector<OutputRecord> parse(const std::string& text)
{
    std::istringstream in(text);
    return read_csv(in);
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("mpmsim-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("grid syntax")
{
    CHECK(parse_grid("0:180:5").size() == 37);
    CHECK(parse_grid("-180:180:30").size() == 13);
    CHECK(parse_grid("0:1:0.1").size() == 11);
    CHECK(parse_grid("5:5:1") == std::vector<double>{5.0});
    CHECK(parse_grid("0:10:3") == std::vector<double>{0.0, 3.0, 6.0, 9.0});
    CHECK_THROWS_AS(parse_grid("0:10"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:10:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("10:0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("0:1:1:1"), std::invalid_argument);
}

TEST_CASE("run emits one record")
{
    const auto o = cli({"run", "--scenario", "Sc5", "--tdl", "TDL-A", "--tx", "nba", "--alpha-t", "180", "--rx",
                        "omni", "--samples", "2000"});
    REQUIRE(o.code == 0);
    const auto recs = parse(o.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].scenario == "Sc5");
    CHECK(recs[0].tx_kind == "nba");
    CHECK(recs[0].alpha_t_deg == 180.0);
    CHECK(recs[0].seed == 42);
    CHECK_FALSE(recs[0].as_rx_output_deg.has_value());

    const auto custom = cli({"run", "--scenario", "Sc1", "--tx", "custom", "--tx-hpbw", "20", "--rx", "wba",
                             "--alpha-r", "5", "--samples", "1000", "--seed", "3", "--rice-k", "2"});
    REQUIRE(custom.code == 0);
    const auto c = parse(custom.out);
    CHECK(c[0].tx_kind == "custom");
    CHECK(c[0].tx_hpbw_deg == 20.0);
    CHECK(c[0].rx_kind == "wba");
    CHECK(c[0].alpha_r_deg == 5.0);
    CHECK(c[0].as_rx_output_deg.has_value());
    CHECK(c[0].seed == 3);
}

TEST_CASE("sweeps")
{
    const auto o = cli({"sweep-alpha", "--scenario", "Sc9", "--tdl", "TDL-B", "--tx", "wba", "--grid", "0:180:5",
                        "--rx", "omni", "--samples", "1000"});
    REQUIRE(o.code == 0);
    const auto recs = parse(o.out);
    REQUIRE(recs.size() == 37);
    CHECK(recs.front().alpha_t_deg == 0.0);
    CHECK(recs.back().alpha_t_deg == 180.0);

    const auto d = cli({"sweep-ds", "--scenario", "Sc7", "--samples", "1000"});
    REQUIRE(d.code == 0);
    const auto ds = parse(d.out);
    REQUIRE(ds.size() == 3);
    CHECK(ds[0].ds_ns == 78.0);
    CHECK(ds[2].ds_ns == 786.0);
    CHECK(ds[2].distance_m == 200.0);

    const auto l = cli({"sweep-ds", "--scenario", "Sc7", "--ds-ns", "10,20,40", "--distance-m", "150", "--samples",
                        "1000"});
    REQUIRE(l.code == 0);
    const auto ls = parse(l.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[1].ds_ns == 20.0);
    CHECK(ls[1].distance_m == 150.0);
}

TEST_CASE("table")
{
    const auto o = cli({"table", "--which", "rx-output", "--samples", "1000"});
    REQUIRE(o.code == 0);
    const auto recs = parse(o.out);
    REQUIRE(recs.size() == 44);
    for (const auto& r : recs) {
        CHECK(r.as_rx_output_deg.has_value());
        CHECK(r.rx_kind == r.tx_kind);
    }
    CHECK(cli({"table", "--which", "nonsense"}).code == 2);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"run"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc12"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--tdl", "TDL-C"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--tx", "horn"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--tx-hpbw", "10"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--tx", "custom"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--rx-hpbw", "10"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--samples", "10"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--kappa", "abc"}).code == 2);
    CHECK(cli({"run", "--scenario", "Sc1", "--format", "xml"}).code == 2);
    CHECK(cli({"sweep-alpha", "--scenario", "Sc1", "--grid", "0:10"}).code == 2);
    CHECK(cli({"sweep-ds", "--scenario", "Sc1", "--ds-ns", "-3"}).code == 2);
    const auto o = cli({"run", "--scenario", "Sc1", "--tx-hpbw", "10"});
    CHECK(o.err.find("--tx-hpbw") != std::string::npos);
}

TEST_CASE("help exits with 0")
{
    const auto o = cli({"--help"});
    CHECK(o.code == 0);
    CHECK(o.out.find("sweep-alpha") != std::string::npos);
}

TEST_CASE("runtime errors exit with 1")
{
    ::setenv("MPM_DATA_DIR", "/nonexistent-dir", 1);
    const auto o = cli({"run", "--scenario", "Sc1", "--samples", "1000"});
    ::unsetenv("MPM_DATA_DIR");
    CHECK(o.code == 1);
    CHECK(o.err.find("error") != std::string::npos);

    const auto dir = scratch("bad-output");
    CHECK(cli({"run", "--scenario", "Sc1", "--samples", "1000", "--output", (dir / "no/such/file.csv").string()})
              .code == 1);
}

TEST_CASE("output file, json lines and config files")
{
    const auto dir = scratch("files");
    const auto out = dir / "run.jsonl";
    auto o = cli({"run", "--scenario", "Sc2", "--samples", "1000", "--format", "jsonl", "--output", out.string()});
    REQUIRE(o.code == 0);
    CHECK(o.out.empty());
    const auto text = slurp(out);
    CHECK(text.front() == '{');
    CHECK(text.find("\"scenario\":\"Sc2\"") != std::string::npos);

    const auto cfg = dir / "recipe.ini";
    std::ofstream(cfg) << "scenario=Sc6\ntdl=TDL-B\ntx=wba\nsamples=1000\nseed=5\n";
    o = cli({"run", "--config", cfg.string()});
    REQUIRE(o.code == 0);
    auto recs = parse(o.out);
    CHECK(recs[0].scenario == "Sc6");
    CHECK(recs[0].tdl == "TDL-B");
    CHECK(recs[0].tx_kind == "wba");
    CHECK(recs[0].seed == 5);

    o = cli({"run", "--config", cfg.string(), "--seed", "8", "--scenario", "Sc4"});
    REQUIRE(o.code == 0);
    recs = parse(o.out);
    CHECK(recs[0].scenario == "Sc4");
    CHECK(recs[0].seed == 8);
    CHECK(recs[0].tdl == "TDL-B");
}

TEST_CASE("deterministic output")
{
    const std::vector<std::string> args = {"sweep-alpha", "--scenario", "Sc3", "--grid", "0:180:45", "--samples",
                                           "1000", "--seed", "7"};
    const auto a = cli(args);
    const auto b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("plot data")
{
    const auto dir = scratch("plots");
    auto o = cli({"plotdata", "--figure", "2", "--out-dir", dir.string(), "--samples", "1000", "--grid",
                  "0:180:90"});
    REQUIRE(o.code == 0);
    CHECK(std::filesystem::exists(dir / "fig02_Sc1_TDL-A_nba.dat"));
    CHECK(std::filesystem::exists(dir / "fig02_Sc3_TDL-A_nba.dat"));
    int files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        files += e.path().filename().string().rfind("fig02_", 0) == 0;
    CHECK(files == 3);
    const auto curve = slurp(dir / "fig02_Sc2_TDL-A_nba.dat");
    CHECK(std::count(curve.begin(), curve.end(), '\n') == 3);
    CHECK(curve.rfind("0.000000 ", 0) == 0);

    o = cli({"plotdata", "--figure", "10", "--tx", "wba", "--out-dir", dir.string(), "--samples", "1000",
             "--ds-ns", "50,500"});
    REQUIRE(o.code == 0);
    for (const char* env : {"IndoorOffice", "UMiStreetCanyon", "UMa", "O2I"})
        CHECK(std::filesystem::exists(dir / (std::string("fig10_") + env + "_TDL-A_wba.dat")));

    // re-running gives identical files
    const auto before = slurp(dir / "fig10_UMa_TDL-A_wba.dat");
    cli({"plotdata", "--figure", "10", "--tx", "wba", "--out-dir", dir.string(), "--samples", "1000", "--ds-ns",
         "50,500"});
    CHECK(slurp(dir / "fig10_UMa_TDL-A_wba.dat") == before);

    // from a sweep file
    const auto csv = dir / "sweep.csv";
    REQUIRE(cli({"sweep-alpha", "--scenario", "Sc4", "--grid", "-90:90:45", "--samples", "1000", "--output",
                 csv.string()})
                .code == 0);
    const auto from_file = dir / "from-file";
    o = cli({"plotdata", "--input", csv.string(), "--x", "alpha", "--out-dir", from_file.string()});
    REQUIRE(o.code == 0);
    const auto text = slurp(from_file / "Sc4_TDL-A_nba.dat");
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(text.rfind("90.000000 ", 0) == 0);

    const auto empty = dir / "empty.csv";
    std::ofstream(empty) << kCsvHeader << '\n';
    CHECK(cli({"plotdata", "--input", empty.string(), "--out-dir", dir.string()}).code == 1);
    CHECK(cli({"plotdata", "--out-dir", dir.string()}).code == 2);
    CHECK(cli({"plotdata", "--figure", "11"}).code == 2);
}
