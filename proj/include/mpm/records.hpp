// SPDX-License-Identifier: Apache-2.0
//
// Flat per-point output records and their CSV / JSON-lines encodings.
//
// CSV columns, in order:
//   scenario,environment,tdl,ds_ns,distance_m,tx_kind,tx_hpbw_deg,
//   alpha_t_deg,rx_kind,alpha_r_deg,as_reception_deg,as_rx_output_deg,
//   mc_stderr_deg,seed
// as_rx_output_deg is empty (CSV) or null (JSON) without a directional Rx.

#pragma once

#include "mpm/runner.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mpm {

struct OutputRecord
{
    std::string scenario;
    std::string environment;
    std::string tdl;
    double ds_ns = 0.0;
    double distance_m = 0.0;
    std::string tx_kind;
    double tx_hpbw_deg = 0.0;
    double alpha_t_deg = 0.0;
    std::string rx_kind;
    double alpha_r_deg = 0.0;
    double as_reception_deg = 0.0;
    std::optional<double> as_rx_output_deg;
    double mc_stderr_deg = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const OutputRecord&) const = default;
};

/// "nba", "wba", "omni" or "custom".
std::string antenna_label(const AntennaPattern& pattern);

/// alpha_t_deg is reported as given (a sweep may ask for -180).
OutputRecord make_record(const RunResult& result, double alpha_t_deg);
OutputRecord make_record(const RunResult& result);

extern const char* const kCsvHeader;

void write_csv(std::ostream& out, std::span<const OutputRecord> records);
void write_jsonl(std::ostream& out, std::span<const OutputRecord> records);

/// Parses CSV written by write_csv. Throws std::runtime_error on a bad
/// header or row.
std::vector<OutputRecord> read_csv(std::istream& in);

/// Fixed-point rendering with the classic locale.
std::string format_fixed(double value, int decimals);

} // namespace mpm
