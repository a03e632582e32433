#pragma once

#include <iosfwd>

namespace simtri {

// Command dispatch for the `simtri` tool. Exit codes: 0 accept, 1 reject,
// 2 input error. A file argument of "-" reads from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace simtri
