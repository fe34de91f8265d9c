#pragma once

#include <iosfwd>

namespace flexcontact {

/// Exit codes: 0 the computed property holds, 1 it fails, 2 invalid input,
/// 3 internal error.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitInvalid = 2, kExitInternal = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flexcontact
