#pragma once

#include <vector>

namespace posetfix {

// Index into a Poset carrier. Carrier order is declaration order and is the
// tiebreak for every deterministic output.
using Elem = int;

// Sorted ascending, no duplicates.
using Subset = std::vector<Elem>;

// Execution policy for the data-parallel kernels. `serial` is the reference
// path; tests assert both produce identical results.
enum class Exec { serial, parallel };

}  // namespace posetfix
