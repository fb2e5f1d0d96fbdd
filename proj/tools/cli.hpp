#pragma once

#include <iosfwd>

namespace monocurve::cli {

// Exit codes: 0 success, 1 invalid input, 2 guard violation,
// 3 selfcheck found a failing case.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace monocurve::cli
