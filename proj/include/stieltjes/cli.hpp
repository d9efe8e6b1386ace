#pragma once

// Command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 precision failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace stj {

enum ExitCode { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2, exit_precision = 3 };

// args excludes the program name. Output goes to `out` unless --out is
// given; diagnostics and usage errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stj
