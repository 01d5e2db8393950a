#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gds::cli {

/// Stable exit-code contract of the `gds` tool.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
};

/// Runs the tool on `args` (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.6+0.8i,-0.8+0.6i" -> {(0.6, 0.8), (-0.8, 0.6)}. The imaginary part needs
/// an explicit sign and a trailing 'i'; a zero imaginary part is rejected.
/// Throws gds::ValidationError with the offending item.
std::vector<std::complex<double>> parse_pairs(std::string_view text);

/// "1,-1,1,1" -> {1, -1, 1, 1}.
std::vector<double> parse_real_list(std::string_view text);

/// Seed used when --seed is absent: $GDS_DEFAULT_SEED if set, else 0.
std::uint64_t default_seed();

}  // namespace gds::cli
