#pragma once

#include <iosfwd>

namespace r2quad::cli {

/// Entry point of the `r2quad` tool. Returns 0 on success, 2 on a usage error
/// and 1 when a numerical routine throws.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace r2quad::cli
