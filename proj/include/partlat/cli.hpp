#ifndef PARTLAT_CLI_HPP
#define PARTLAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace partlat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), writes data to `out` and
/// diagnostics to `err`. Returns 0 on success, 1 when `verify` finds a
/// failure, 2 on a usage or size-guard error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partlat

#endif // PARTLAT_CLI_HPP
