// SPDX-License-Identifier: Apache-2.0

#include "mpm/tdl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#ifndef MPM_DEFAULT_DATA_DIR
#define MPM_DEFAULT_DATA_DIR "data"
#endif

namespace mpm {

std::string_view to_string(TdlProfile profile)
{
    return profile == TdlProfile::A ? "TDL-A" : "TDL-B";
}

TdlProfile parse_tdl_profile(std::string_view text)
{
    std::string s;
    for (char c : text)
        s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (s == "TDL-A" || s == "TDL_A" || s == "TDLA" || s == "A")
        return TdlProfile::A;
    if (s == "TDL-B" || s == "TDL_B" || s == "TDLB" || s == "B")
        return TdlProfile::B;
    throw std::invalid_argument("unknown profile: " + std::string(text));
}

TapDelayLine::TapDelayLine(TdlProfile profile, std::vector<Tap> taps)
    : profile_(profile), taps_(std::move(taps))
{
    if (taps_.empty())
        throw std::invalid_argument("tapped delay line has no taps");
    if (taps_.front().delay != 0.0)
        throw std::invalid_argument("first tap must have zero delay");
    for (std::size_t i = 0; i < taps_.size(); ++i) {
        if (!std::isfinite(taps_[i].delay) || !std::isfinite(taps_[i].power_db))
            throw std::invalid_argument("tap values must be finite");
        if (i > 0 && !(taps_[i].delay > taps_[i - 1].delay))
            throw std::invalid_argument("tap delays must be strictly increasing");
    }
}

TdlParseError::TdlParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line)
{
}

TapDelayLine parse_tdl(std::istream& in, TdlProfile profile, const std::string& source)
{
    std::vector<Tap> taps;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;

        std::istringstream fields(line);
        fields.imbue(std::locale::classic());
        Tap tap;
        if (!(fields >> tap.index >> tap.delay >> tap.power_db))
            throw TdlParseError(source, line_no, "expected 'tap_index normalized_delay power_db'");
        std::string extra;
        if (fields >> extra)
            throw TdlParseError(source, line_no, "unexpected trailing field '" + extra + "'");
        if (tap.delay < 0.0 || !std::isfinite(tap.delay))
            throw TdlParseError(source, line_no, "delay must be a finite non-negative number");
        if (!std::isfinite(tap.power_db))
            throw TdlParseError(source, line_no, "power must be finite");
        for (const auto& t : taps) {
            if (t.delay == tap.delay)
                throw TdlParseError(source, line_no, "duplicate delay");
            if (t.index == tap.index)
                throw TdlParseError(source, line_no, "duplicate tap index");
        }
        taps.push_back(tap);
    }
    if (taps.empty())
        throw TdlParseError(source, line_no, "no taps found");

    std::stable_sort(taps.begin(), taps.end(), [](const Tap& a, const Tap& b) { return a.delay < b.delay; });
    if (taps.front().delay != 0.0)
        throw TdlParseError(source, line_no, "profile has no zero-delay tap");
    return TapDelayLine(profile, std::move(taps));
}

std::string profile_file_name(TdlProfile profile)
{
    return profile == TdlProfile::A ? "tdl_a.txt" : "tdl_b.txt";
}

std::filesystem::path default_data_dir()
{
    if (const char* env = std::getenv("MPM_DATA_DIR"); env && *env)
        return env;
    return MPM_DEFAULT_DATA_DIR;
}

TapDelayLine load_tdl_profile(TdlProfile profile, const std::filesystem::path& data_dir)
{
    auto path = data_dir / profile_file_name(profile);
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open profile file " + path.string());
    return parse_tdl(in, profile, path.string());
}

TapDelayLine load_tdl_profile(std::string_view profile_id, const std::filesystem::path& data_dir)
{
    return load_tdl_profile(parse_tdl_profile(profile_id), data_dir);
}

TapDelayLine scale_delays(const TapDelayLine& tdl, double ds_ns)
{
    if (!(ds_ns > 0.0) || !std::isfinite(ds_ns))
        throw std::domain_error("delay spread must be positive");
    std::vector<Tap> taps(tdl.taps().begin(), tdl.taps().end());
    for (auto& t : taps)
        t.delay *= ds_ns;
    return TapDelayLine(tdl.profile(), std::move(taps));
}

NormalizedWeights::NormalizedWeights(std::vector<double> weights) : weights_(std::move(weights))
{
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0))
            throw std::invalid_argument("weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("weights must sum to one");
}

NormalizedWeights normalize_powers(const TapDelayLine& tdl)
{
    // Shift by the strongest tap so the exponentials stay in range.
    double peak = tdl[0].power_db;
    for (const auto& t : tdl.taps())
        peak = std::max(peak, t.power_db);

    std::vector<double> linear;
    linear.reserve(tdl.size());
    for (const auto& t : tdl.taps())
        linear.push_back(std::pow(10.0, (t.power_db - peak) / 10.0));
    double sum = std::accumulate(linear.begin(), linear.end(), 0.0);
    for (auto& w : linear)
        w /= sum;
    return NormalizedWeights(std::move(linear));
}

// --- scenario catalog -------------------------------------------------------

std::string_view to_string(Environment env)
{
    switch (env) {
    case Environment::IndoorOffice:
        return "IndoorOffice";
    case Environment::UMiStreetCanyon:
        return "UMiStreetCanyon";
    case Environment::UMa:
        return "UMa";
    case Environment::O2I:
        return "O2I";
    }
    return "?";
}

std::string_view to_string(PdpFlavor flavor)
{
    switch (flavor) {
    case PdpFlavor::ShortDelay:
        return "ShortDelay";
    case PdpFlavor::NormalDelay:
        return "NormalDelay";
    case PdpFlavor::LongDelay:
        return "LongDelay";
    }
    return "?";
}

std::string to_string(ScenarioId id)
{
    return "Sc" + std::to_string(static_cast<int>(id));
}

ScenarioId parse_scenario_id(std::string_view text)
{
    if (text.size() >= 3 && (text[0] == 'S' || text[0] == 's') && (text[1] == 'c' || text[1] == 'C')) {
        int n = 0;
        bool digits = true;
        for (char c : text.substr(2)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                digits = false;
                break;
            }
            n = n * 10 + (c - '0');
        }
        if (digits && n >= 1 && n <= 11)
            return static_cast<ScenarioId>(n);
    }
    throw std::invalid_argument("unknown scenario: " + std::string(text));
}

double environment_distance_m(Environment env)
{
    switch (env) {
    case Environment::IndoorOffice:
        return 50.0;
    case Environment::UMiStreetCanyon:
        return 100.0;
    case Environment::UMa:
        return 200.0;
    case Environment::O2I:
        return 100.0;
    }
    return 0.0;
}

namespace {

constexpr Scenario row(ScenarioId id, Environment env, PdpFlavor flavor, double ds_ns, double distance_m)
{
    return Scenario{id, env, flavor, ds_ns, distance_m, 39.0};
}

using E = Environment;
using P = PdpFlavor;
using S = ScenarioId;

constexpr std::array<Scenario, 11> kCatalog = {
    row(S::Sc1, E::IndoorOffice, P::ShortDelay, 16.0, 50.0),
    row(S::Sc2, E::IndoorOffice, P::NormalDelay, 18.0, 50.0),
    row(S::Sc3, E::IndoorOffice, P::LongDelay, 41.0, 50.0),
    row(S::Sc4, E::UMiStreetCanyon, P::ShortDelay, 30.0, 100.0),
    row(S::Sc5, E::UMiStreetCanyon, P::NormalDelay, 61.0, 100.0),
    row(S::Sc6, E::UMiStreetCanyon, P::LongDelay, 297.0, 100.0),
    row(S::Sc7, E::UMa, P::ShortDelay, 78.0, 200.0),
    row(S::Sc8, E::UMa, P::NormalDelay, 249.0, 200.0),
    row(S::Sc9, E::UMa, P::LongDelay, 786.0, 200.0),
    row(S::Sc10, E::O2I, P::NormalDelay, 240.0, 100.0),
    row(S::Sc11, E::O2I, P::LongDelay, 616.0, 100.0),
};

} // namespace

std::span<const Scenario> scenario_catalog() { return kCatalog; }

const Scenario& find_scenario(ScenarioId id)
{
    return kCatalog.at(static_cast<std::size_t>(id) - 1);
}

std::vector<Scenario> scenarios_in(Environment env)
{
    std::vector<Scenario> out;
    for (const auto& s : kCatalog)
        if (s.environment == env)
            out.push_back(s);
    return out;
}

} // namespace mpm
