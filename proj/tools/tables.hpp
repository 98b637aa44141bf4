#pragma once

#include <iosfwd>

namespace r2quad::cli {

/// Recomputes published table `id` (1..10), prints it as a text table with the
/// reference values alongside, and returns true when every checked entry is
/// within tolerance.
bool reproduce_table(int id, std::ostream& out);

}  // namespace r2quad::cli
