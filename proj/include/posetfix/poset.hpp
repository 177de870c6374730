#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetfix/core.hpp"
#include "posetfix/errors.hpp"

namespace posetfix {

// How an order relation is given to build_poset: as covering pairs to be
// closed reflexively and transitively, or as the full (already closed)
// relation.
enum class OrderInput { covers, full };

using LabelPair = std::pair<std::string, std::string>;

// Finite poset: carrier of labeled elements plus a closed relation table.
// Immutable after construction; leq is an O(1) table lookup.
class Poset {
 public:
  Poset() = default;

  int size() const { return n_; }

  bool leq(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    return rel_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

  bool leq_unchecked(Elem a, Elem b) const {
    return rel_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

  const std::string& label(Elem x) const {
    check_elem(x);
    return labels_[x];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Elem> find(std::string_view lbl) const;

  // Like find, but throws unknown_label.
  Elem index_of(std::string_view lbl) const;

  std::optional<Elem> bottom() const { return bottom_; }
  std::optional<Elem> top() const { return top_; }

  const std::uint8_t* relation_data() const { return rel_.data(); }

  // {0, 1, ..., n-1}.
  Subset carrier() const;

  void check_elem(Elem x) const {
    if (x < 0 || x >= n_)
      throw PosetError(Errc::unknown_element,
                       "element index " + std::to_string(x) + " out of range");
  }

 private:
  friend Poset build_poset(const std::vector<std::string>&,
                           const std::vector<LabelPair>&, OrderInput, Exec);
  friend Poset poset_from_matrix(std::vector<std::string>,
                                 std::vector<std::uint8_t>);

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> rel_;  // n*n row-major closed relation
  std::unordered_map<std::string, Elem> index_;
  std::optional<Elem> bottom_;
  std::optional<Elem> top_;

  void finish_construction();  // index, bottom/top detection
};

// Validates labels and pairs, closes (mode covers) or checks (mode full) the
// relation, and verifies the poset axioms.
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<LabelPair>& pairs, OrderInput mode,
                  Exec exec = Exec::parallel);

// Trusted entry for generators: matrix must already be a closed order
// relation (still verified, cheaply).
Poset poset_from_matrix(std::vector<std::string> labels,
                        std::vector<std::uint8_t> matrix);

// Sorts, dedupes and bounds-checks.
Subset make_subset(const Poset& p, std::vector<Elem> members);

bool is_chain(const Poset& p, const Subset& s);

// Non-empty and every pair has a majorant inside s.
bool is_directed(const Poset& p, const Subset& s);

// Least upper bound over the whole carrier; nullopt when none.
// sup of the empty subset is the bottom element when present.
std::optional<Elem> sup_subset(const Poset& p, const Subset& s);

// Greatest lower bound; inf of the empty subset is the top when present.
std::optional<Elem> inf_subset(const Poset& p, const Subset& s);

std::optional<Elem> join(const Poset& p, Elem a, Elem b);
std::optional<Elem> meet(const Poset& p, Elem a, Elem b);

// Fast path for finite posets: chain-complete iff a bottom exists.
bool is_chain_complete(const Poset& p);

// Bounded top and bottom plus pairwise joins and meets.
bool is_complete_lattice(const Poset& p);

// Exhaustive definitions, for cross-checking the fast paths above on small
// carriers (every chain has a sup / every subset has a sup and an inf).
inline constexpr int exhaustive_limit = 16;
bool is_chain_complete_literal(const Poset& p);
bool is_complete_lattice_literal(const Poset& p);

// New poset on s with the restricted relation; bottom/top recomputed.
Poset induced_subposet(const Poset& p, const Subset& s);

// Principal filter {x : a <= x}.
Subset upper_set(const Poset& p, Elem a);

// Calls fn(mask) for every chain of p, the empty chain included; elements of
// the mask are carrier indices. Requires size() <= exhaustive_limit.
void for_each_chain_mask(const Poset& p, const std::function<void(std::uint32_t)>& fn);

Subset subset_from_mask(std::uint32_t mask);

}  // namespace posetfix
