#ifndef FUSION_GERBE_CLI_HPP
#define FUSION_GERBE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fusion_gerbe::cli {

/// Exit codes: 0 success, 1 check/verification failure or unwritable
/// output, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::uint64_t seed = 1;
  int workers = 1;
  std::string format = "text";  // text | json | csv
  std::map<std::string, double> tolerances;
};

/// Runs the fusion-gerbe command line. Deterministic: identical arguments
/// and seed produce identical bytes on `out` for any worker count; timing
/// goes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusion_gerbe::cli

#endif
