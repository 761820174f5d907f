#pragma once

#include <ostream>

namespace cfla::harness {

/// Runs the command-line interface. Returns 0 when every executed check
/// passes, 1 when a check fails and 2 on usage or load errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfla::harness
