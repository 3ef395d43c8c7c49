// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, 1 runtime failure,
// 2 usage error.

#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

namespace mpm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// "a:b:step", both ends inclusive. Throws std::invalid_argument.
std::vector<double> parse_grid(std::string_view text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mpm
