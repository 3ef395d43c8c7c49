// SPDX-License-Identifier: Apache-2.0
//
// Tapped-delay-line power delay profiles and the 39 GHz scenario catalog.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpm {

enum class TdlProfile { A, B };

/// "TDL-A" / "TDL-B".
std::string_view to_string(TdlProfile profile);

/// Accepts "TDL-A", "TDL_A", "tdl-a" and the bare letter. Throws
/// std::invalid_argument("unknown profile: ...") otherwise.
TdlProfile parse_tdl_profile(std::string_view text);

struct Tap
{
    int index = 0;        // tap number as listed in the source table
    double delay = 0.0;   // normalized, or ns once scaled
    double power_db = 0.0;
};

/// Ordered taps of a power delay profile. Taps are sorted by delay, the
/// first tap sits at delay zero and no two taps share a delay.
class TapDelayLine
{
  public:
    /// Throws std::invalid_argument if the invariants above do not hold.
    TapDelayLine(TdlProfile profile, std::vector<Tap> taps);

    TdlProfile profile() const { return profile_; }
    std::span<const Tap> taps() const { return taps_; }
    std::size_t size() const { return taps_.size(); }
    const Tap& operator[](std::size_t i) const { return taps_[i]; }

  private:
    TdlProfile profile_;
    std::vector<Tap> taps_;
};

/// Raised for malformed profile files; carries the 1-based line number.
class TdlParseError : public std::runtime_error
{
  public:
    TdlParseError(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

  private:
    int line_;
};

/// Parses "tap_index normalized_delay power_db" lines; '#' starts a comment
/// line. Taps are sorted by delay on the way in.
TapDelayLine parse_tdl(std::istream& in, TdlProfile profile, const std::string& source = "<stream>");

/// File name of a profile inside the data directory ("tdl_a.txt").
std::string profile_file_name(TdlProfile profile);

/// MPM_DATA_DIR if set, otherwise the directory configured at build time.
std::filesystem::path default_data_dir();

TapDelayLine load_tdl_profile(TdlProfile profile, const std::filesystem::path& data_dir = default_data_dir());
TapDelayLine load_tdl_profile(std::string_view profile_id, const std::filesystem::path& data_dir = default_data_dir());

/// Multiplies every normalized delay by ds_ns. Throws std::domain_error
/// unless ds_ns is positive and finite.
TapDelayLine scale_delays(const TapDelayLine& tdl, double ds_ns);

/// Linear tap powers normalized to unit sum.
class NormalizedWeights
{
  public:
    NormalizedWeights() = default;
    explicit NormalizedWeights(std::vector<double> weights);

    std::span<const double> values() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }

  private:
    std::vector<double> weights_;
};

NormalizedWeights normalize_powers(const TapDelayLine& tdl);

// --- scenario catalog -------------------------------------------------------

enum class Environment { IndoorOffice, UMiStreetCanyon, UMa, O2I };
enum class PdpFlavor { ShortDelay, NormalDelay, LongDelay };
enum class ScenarioId { Sc1 = 1, Sc2, Sc3, Sc4, Sc5, Sc6, Sc7, Sc8, Sc9, Sc10, Sc11 };

struct Scenario
{
    ScenarioId id;
    Environment environment;
    PdpFlavor pdp_flavor;
    double ds_ns;
    double distance_m;
    double frequency_ghz = 39.0;
};

std::string_view to_string(Environment env);
std::string_view to_string(PdpFlavor flavor);
std::string to_string(ScenarioId id);

/// "Sc5" or "sc5". Throws std::invalid_argument for anything else.
ScenarioId parse_scenario_id(std::string_view text);

/// Tx-Rx distance used for every scenario of an environment.
double environment_distance_m(Environment env);

/// The eleven rows of the 39 GHz delay-spread table, in order Sc1..Sc11.
std::span<const Scenario> scenario_catalog();

const Scenario& find_scenario(ScenarioId id);

/// Catalog rows of one environment, ordered by delay spread.
std::vector<Scenario> scenarios_in(Environment env);

} // namespace mpm
