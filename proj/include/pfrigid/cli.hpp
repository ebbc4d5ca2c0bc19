#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfrigid::cli {

inline constexpr const char* kToolVersion = "pfrigid 0.1.0";

/// Runs one invocation. args excludes the program name. Returns 0 when the
/// result was computed, 1 on usage or parse errors, 2 on domain errors.
/// Nothing is written to out unless the whole document was produced.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfrigid::cli
