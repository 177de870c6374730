#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posetfix/core.hpp"

namespace posetfix::kernels {

// Row-parallel kernels over the n x n boolean relation matrix (row-major,
// rel[a*n+b] != 0 iff a <= b). Every kernel has a serial reference twin with
// bit-identical output; the OpenMP variants only parallelize loops whose
// iterations are independent.

// In-place reflexive-transitive closure (Warshall).
void transitive_closure(std::uint8_t* rel, int n, Exec exec = Exec::parallel);
void transitive_closure_serial(std::uint8_t* rel, int n);

// Smallest (x, y) in row-major order with x <= y but not table[x] <= table[y].
// Returns {-1, -1} when the map is isotone.
std::pair<Elem, Elem> isotone_violation(const std::uint8_t* rel, const Elem* table,
                                        int n, Exec exec = Exec::parallel);
std::pair<Elem, Elem> isotone_violation_serial(const std::uint8_t* rel,
                                               const Elem* table, int n);

// out[x] = 1 iff x <= f(x) for every table f in `tables`.
void extensive_mask(const std::uint8_t* rel, const std::vector<const Elem*>& tables,
                    int n, std::uint8_t* out, Exec exec = Exec::parallel);
void extensive_mask_serial(const std::uint8_t* rel,
                           const std::vector<const Elem*>& tables, int n,
                           std::uint8_t* out);

// out[x] = 1 iff f(x) = x for every table f in `tables`. Pure table lookups;
// this is the scan behind the brute-force oracle.
void fixed_mask(const std::vector<const Elem*>& tables, int n, std::uint8_t* out,
                Exec exec = Exec::parallel);
void fixed_mask_serial(const std::vector<const Elem*>& tables, int n,
                       std::uint8_t* out);

}  // namespace posetfix::kernels
