#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetfix/mapping.hpp"
#include "posetfix/poset.hpp"
#include "posetfix/rng.hpp"

namespace posetfix {

enum class PosetKind {
  chain,
  antichain_plus_bottom,
  powerset,
  divisor,
  product,
  diamond_m3,
  pentagon_n5,
  random_order,
};

const char* poset_kind_name(PosetKind k);
PosetKind poset_kind_from_name(const std::string& name);  // throws bad_spec

inline constexpr int max_generated_carrier = 64;

struct GenSpec {
  PosetKind kind = PosetKind::chain;
  int n = 1;               // primary size parameter
  int m = 0;               // second chain length for `product`
  std::uint64_t rng_seed = 0;  // used by random_order only
};

// chain(n): 0 < 1 < ... < n-1. powerset(n): subsets of {1..n} by inclusion.
// divisor(n): divisors of n by divisibility. product(n, m): chain(n) x
// chain(m) componentwise. diamond_m3 / pentagon_n5: the standard 5-element
// lattices. antichain_plus_bottom(n): n incomparable elements over one
// bottom. random_order(n): random DAG, transitively closed, bottom adjoined.
Poset make_standard_poset(const GenSpec& spec);

// {x -> x v a : a in A}. Requires pairwise joins (not_a_lattice otherwise).
// Members are isotone, commuting and extensive; the joint fix set is the
// principal filter of sup A.
Family join_translation_family(const Poset& p, const Subset& A);

enum class FamilyStrategy { powers, join_translations };

const char* family_strategy_name(FamilyStrategy s);
FamilyStrategy family_strategy_from_name(const std::string& name);

// Random isotone map by sampling along a linear extension: each image is
// drawn from the common upper bounds of the images of the element's lower
// covers. Redraws with a split stream in the rare case a non-lattice poset
// leaves no candidate; falls back to a constant map, so it never fails.
MapTable random_isotone_map(const Poset& p, SplitMix64& rng, std::string name);

// powers: {f, f^2, ..., f^count} of one random isotone map, deduplicated.
// join_translations: join_translation_family with a random non-empty A.
// Commutative and isotone by construction (and asserted in tests).
Family random_commuting_family(const Poset& p, FamilyStrategy strategy,
                               int count, std::uint64_t rng_seed);

}  // namespace posetfix
