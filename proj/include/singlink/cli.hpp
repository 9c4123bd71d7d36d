#pragma once

#include <iosfwd>

namespace singlink {

/// Runs the command line tool. Returns 0 on success, 1 on a domain error (message on
/// `err`), 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singlink
