#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pzcli {

enum ExitCode : int { kOk = 0, kExhausted = 1, kInputError = 2 };

/// Entry point of the `pz` tool. Reports go to `out` as JSON, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with argv[0] supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pzcli
