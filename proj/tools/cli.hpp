#pragma once

#include <ostream>

namespace nilsys::cli {

/// Runs the nilsys command line. Exit codes: 0 success, 1 mismatch or
/// witness failure, 2 input error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nilsys::cli
