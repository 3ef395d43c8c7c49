// SPDX-License-Identifier: Apache-2.0

#include "mpm/records.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mpm {

const char* const kCsvHeader =
    "scenario,environment,tdl,ds_ns,distance_m,tx_kind,tx_hpbw_deg,alpha_t_deg,rx_kind,alpha_r_deg,"
    "as_reception_deg,as_rx_output_deg,mc_stderr_deg,seed";

std::string antenna_label(const AntennaPattern& pattern)
{
    if (!pattern.directional())
        return "omni";
    if (pattern.hpbw_deg == kNarrowBeamHpbwDeg && pattern.gain_dbi == kNarrowBeamGainDbi && !pattern.sidelobe_floor_db)
        return "nba";
    if (pattern.hpbw_deg == kWideBeamHpbwDeg && pattern.gain_dbi == kWideBeamGainDbi && !pattern.sidelobe_floor_db)
        return "wba";
    return "custom";
}

OutputRecord make_record(const RunResult& result, double alpha_t_deg)
{
    const auto& cfg = result.config;
    const auto& scenario = find_scenario(cfg.scenario);
    OutputRecord r;
    r.scenario = to_string(cfg.scenario);
    r.environment = std::string(to_string(scenario.environment));
    r.tdl = std::string(to_string(cfg.tdl));
    r.ds_ns = result.ds_ns;
    r.distance_m = result.distance_m;
    r.tx_kind = antenna_label(cfg.tx);
    r.tx_hpbw_deg = cfg.tx.hpbw_deg;
    r.alpha_t_deg = alpha_t_deg;
    const AntennaPattern rx = cfg.rx.value_or(AntennaPattern::omni());
    r.rx_kind = antenna_label(rx);
    r.alpha_r_deg = rx.boresight_deg;
    r.as_reception_deg = result.reception.sigma_deg;
    if (result.rx_output)
        r.as_rx_output_deg = result.rx_output->sigma_deg;
    r.mc_stderr_deg = result.reception_stderr_deg;
    r.seed = cfg.seed;
    return r;
}

OutputRecord make_record(const RunResult& result)
{
    return make_record(result, result.config.tx.boresight_deg);
}

std::string format_fixed(double value, int decimals)
{
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite value in output record");
    char buf[400];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    std::string s(buf, res.ptr);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-')
        s.erase(0, 1);  // no "-0.000000"
    return s;
}

namespace {

constexpr int kDecimals = 6;

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, int line)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

} // namespace

void write_csv(std::ostream& out, std::span<const OutputRecord> records)
{
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.scenario << ',' << r.environment << ',' << r.tdl << ',' << format_fixed(r.ds_ns, kDecimals) << ','
            << format_fixed(r.distance_m, kDecimals) << ',' << r.tx_kind << ','
            << format_fixed(r.tx_hpbw_deg, kDecimals) << ',' << format_fixed(r.alpha_t_deg, kDecimals) << ','
            << r.rx_kind << ',' << format_fixed(r.alpha_r_deg, kDecimals) << ','
            << format_fixed(r.as_reception_deg, kDecimals) << ','
            << (r.as_rx_output_deg ? format_fixed(*r.as_rx_output_deg, kDecimals) : std::string()) << ','
            << format_fixed(r.mc_stderr_deg, kDecimals) << ',' << r.seed << '\n';
    }
}

void write_jsonl(std::ostream& out, std::span<const OutputRecord> records)
{
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["scenario"] = r.scenario;
        j["environment"] = r.environment;
        j["tdl"] = r.tdl;
        j["ds_ns"] = r.ds_ns;
        j["distance_m"] = r.distance_m;
        j["tx_kind"] = r.tx_kind;
        j["tx_hpbw_deg"] = r.tx_hpbw_deg;
        j["alpha_t_deg"] = r.alpha_t_deg;
        j["rx_kind"] = r.rx_kind;
        j["alpha_r_deg"] = r.alpha_r_deg;
        j["as_reception_deg"] = r.as_reception_deg;
        j["as_rx_output_deg"] = r.as_rx_output_deg ? nlohmann::ordered_json(*r.as_rx_output_deg) : nullptr;
        j["mc_stderr_deg"] = r.mc_stderr_deg;
        j["seed"] = r.seed;
        out << j.dump() << '\n';
    }
}

std::vector<OutputRecord> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty CSV input");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kCsvHeader)
        throw std::runtime_error("unexpected CSV header");

    std::vector<OutputRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        auto f = split_csv(line);
        if (f.size() != 14)
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 14 fields");
        OutputRecord r;
        r.scenario = f[0];
        r.environment = f[1];
        r.tdl = f[2];
        r.ds_ns = parse_double(f[3], line_no);
        r.distance_m = parse_double(f[4], line_no);
        r.tx_kind = f[5];
        r.tx_hpbw_deg = parse_double(f[6], line_no);
        r.alpha_t_deg = parse_double(f[7], line_no);
        r.rx_kind = f[8];
        r.alpha_r_deg = parse_double(f[9], line_no);
        r.as_reception_deg = parse_double(f[10], line_no);
        if (!f[11].empty())
            r.as_rx_output_deg = parse_double(f[11], line_no);
        r.mc_stderr_deg = parse_double(f[12], line_no);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(f[13].data(), f[13].data() + f[13].size(), seed);
        if (ec != std::errc() || ptr != f[13].data() + f[13].size())
            throw std::runtime_error("line " + std::to_string(line_no) + ": bad seed");
        r.seed = seed;
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace mpm
