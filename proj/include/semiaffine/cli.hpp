#pragma once

// Command-line entry point, stream-parameterized so tests can capture
// output. Exit codes: 0 success / all checks passed, 1 a property failure
// was found, 2 usage or parse error (diagnostic on err, nothing on out).

#include <iosfwd>

namespace semiaffine {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semiaffine
