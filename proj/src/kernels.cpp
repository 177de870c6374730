#include "posetfix/kernels.hpp"

#include <cstdint>

namespace posetfix::kernels {

namespace {

// Rows below this size are not worth a parallel region.
constexpr int par_cutoff = 64;

}  // namespace

void transitive_closure_serial(std::uint8_t* rel, int n) {
  for (int i = 0; i < n; ++i) rel[static_cast<std::size_t>(i) * n + i] = 1;
  for (int k = 0; k < n; ++k) {
    const std::uint8_t* row_k = rel + static_cast<std::size_t>(k) * n;
    for (int i = 0; i < n; ++i) {
      std::uint8_t* row_i = rel + static_cast<std::size_t>(i) * n;
      if (i == k || !row_i[k]) continue;
      for (int j = 0; j < n; ++j) row_i[j] |= row_k[j];
    }
  }
}

void transitive_closure(std::uint8_t* rel, int n, Exec exec) {
  if (exec == Exec::serial || n < par_cutoff) {
    transitive_closure_serial(rel, n);
    return;
  }
  for (int i = 0; i < n; ++i) rel[static_cast<std::size_t>(i) * n + i] = 1;
  for (int k = 0; k < n; ++k) {
    const std::uint8_t* row_k = rel + static_cast<std::size_t>(k) * n;
    // Row k is only touched by the skipped i == k iteration, so rows are
    // independent within one pivot step.
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      std::uint8_t* row_i = rel + static_cast<std::size_t>(i) * n;
      if (i == k || !row_i[k]) continue;
      for (int j = 0; j < n; ++j) row_i[j] |= row_k[j];
    }
  }
}

std::pair<Elem, Elem> isotone_violation_serial(const std::uint8_t* rel,
                                               const Elem* table, int n) {
  for (int x = 0; x < n; ++x) {
    const std::uint8_t* row_x = rel + static_cast<std::size_t>(x) * n;
    for (int y = 0; y < n; ++y) {
      if (row_x[y] && !rel[static_cast<std::size_t>(table[x]) * n + table[y]])
        return {x, y};
    }
  }
  return {-1, -1};
}

std::pair<Elem, Elem> isotone_violation(const std::uint8_t* rel,
                                        const Elem* table, int n, Exec exec) {
  if (exec == Exec::serial || n < par_cutoff)
    return isotone_violation_serial(rel, table, n);

  const long long none = static_cast<long long>(n) * n;
  long long best = none;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (int x = 0; x < n; ++x) {
    const std::uint8_t* row_x = rel + static_cast<std::size_t>(x) * n;
    for (int y = 0; y < n; ++y) {
      if (row_x[y] && !rel[static_cast<std::size_t>(table[x]) * n + table[y]]) {
        long long enc = static_cast<long long>(x) * n + y;
        if (enc < best) best = enc;
        break;  // later y in this row can only encode larger
      }
    }
  }
  if (best == none) return {-1, -1};
  return {static_cast<Elem>(best / n), static_cast<Elem>(best % n)};
}

void extensive_mask_serial(const std::uint8_t* rel,
                           const std::vector<const Elem*>& tables, int n,
                           std::uint8_t* out) {
  for (int x = 0; x < n; ++x) {
    std::uint8_t ok = 1;
    for (const Elem* t : tables) {
      if (!rel[static_cast<std::size_t>(x) * n + t[x]]) {
        ok = 0;
        break;
      }
    }
    out[x] = ok;
  }
}

void extensive_mask(const std::uint8_t* rel,
                    const std::vector<const Elem*>& tables, int n,
                    std::uint8_t* out, Exec exec) {
  if (exec == Exec::serial || n < par_cutoff) {
    extensive_mask_serial(rel, tables, n, out);
    return;
  }
  const Elem* const* tabs = tables.data();
  const int m = static_cast<int>(tables.size());
#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    std::uint8_t ok = 1;
    for (int i = 0; i < m; ++i) {
      if (!rel[static_cast<std::size_t>(x) * n + tabs[i][x]]) {
        ok = 0;
        break;
      }
    }
    out[x] = ok;
  }
}

void fixed_mask_serial(const std::vector<const Elem*>& tables, int n,
                       std::uint8_t* out) {
  for (int x = 0; x < n; ++x) {
    std::uint8_t ok = 1;
    for (const Elem* t : tables) {
      if (t[x] != x) {
        ok = 0;
        break;
      }
    }
    out[x] = ok;
  }
}

void fixed_mask(const std::vector<const Elem*>& tables, int n,
                std::uint8_t* out, Exec exec) {
  if (exec == Exec::serial || n < par_cutoff) {
    fixed_mask_serial(tables, n, out);
    return;
  }
  const Elem* const* tabs = tables.data();
  const int m = static_cast<int>(tables.size());
#pragma omp parallel for schedule(static)
  for (int x = 0; x < n; ++x) {
    std::uint8_t ok = 1;
    for (int i = 0; i < m; ++i) {
      if (tabs[i][x] != x) {
        ok = 0;
        break;
      }
    }
    out[x] = ok;
  }
}

}  // namespace posetfix::kernels
