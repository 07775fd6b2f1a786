#pragma once

#include <iosfwd>

namespace qcc::selftest {

/// Runs the oracle suite (dense-matrix cross-checks, gradient identities,
/// synthetic fit round trips). Prints one line per check; returns the number
/// of failures.
int run(std::ostream& out);

}  // namespace qcc::selftest
