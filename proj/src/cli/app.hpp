#pragma once

#include <iosfwd>

namespace qet::cli {

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qet::cli
