#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schwarz {
namespace cli {

// File-driven front end. Subcommands: perimeter, volume, rigidity, witness,
// verify, report. Returns the process exit code: 0 success, 2 precondition
// violation, 3 parse error, 64 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace schwarz
