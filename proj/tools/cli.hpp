#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moutard::cli {

/// Runs one moutard_lab command. args excludes the program name. Reports go
/// to --out when given, otherwise to `out`; diagnostics go to `err`.
/// Returns 0 when every check passes, 1 on failed checks or library errors
/// (with a structured error JSON), 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moutard::cli
