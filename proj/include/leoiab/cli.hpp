#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leoiab {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_infeasible = 3;
inline constexpr int exit_isl_not_visible = 4;

// Command-line front end; args excludes the program name. Writes the
// requested artifact (and nothing else) to out, diagnostics to err, and
// returns the exit status per the contract above.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leoiab
