#pragma once

#include <ostream>

namespace mixgeo::cli {

/// Exit codes: 0 success, 1 usage error, 2 internal error, 3 table mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mixgeo::cli
