#pragma once

#include <iosfwd>

namespace bci::cli {

/// Runs the golden examples; prints one line per check, returns the failure count.
int run_selftest(std::ostream& out);

}  // namespace bci::cli
