#ifndef PERMCLASS_TOOLS_CLI_HPP
#define PERMCLASS_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "permclass/enumerator.hpp"
#include "permclass/power_series.hpp"
#include "permclass/uspec.hpp"

namespace permclass::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

/// Runs one command. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "trivial", "inc", "dec" or "file:PATH". A file that is not downward
/// closed is completed, with a warning written to `err`.
USpec parseUSpec(std::string_view text, std::ostream& err);

/// Smallest length n in 1..maxN where the series coefficient of x^n
/// differs from the count, if any.
std::optional<std::size_t> firstMismatch(const PowerSeries& series,
                                         const CountTable& counts);

}  // namespace permclass::cli

#endif  // PERMCLASS_TOOLS_CLI_HPP
