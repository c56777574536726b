#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulercert::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Dispatches one CLI invocation.  Exit code 0 = success, 1 = domain error
/// (a machine-readable error record is printed to `out`), 2 = usage error.
/// Human logs (version, frozen normalization constant) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulercert::cli
