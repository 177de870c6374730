#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetfix/fixpoint.hpp"
#include "posetfix/mapping.hpp"
#include "posetfix/poset.hpp"

namespace posetfix {

enum class Claim {
  tarski_i,
  markowsky_ii,
  approx_iii_eq1,
  approx_iii_eq2,
  kleene_eq3,
  seeds_eq4,
  ext_equality_eq5,
  orbit_directed,
};

const char* claim_name(Claim c);

struct Verdict {
  Claim claim;
  bool holds = true;
  bool preconds_met = true;
  std::optional<std::string> witness;  // required when holds is false
  std::string note;
  // When preconditions are unmet the claim is not asserted (holds stays
  // vacuously true) but the equality is still evaluated; this records the
  // outcome for counterexample hunting.
  std::optional<bool> empirical;
};

// {x : f(x) = x for every f}. Table lookups and equality only; independent
// of the order-theoretic engine it checks.
Subset brute_force_fixed_points(const Poset& p, const Family& fam,
                                Exec exec = Exec::parallel);

// Structure claims on the induced fix-set poset. Each claim is reported
// under two readings: hypotheses with and without family commutativity.
std::vector<Verdict> verify_structure(const Poset& p, const Family& fam);

// Engine-vs-oracle equalities, extensivity-domain equality, orbit
// directedness, and the singleton-family agreements.
std::vector<Verdict> verify_approximation(const Poset& p, const Family& fam,
                                          Exec exec = Exec::parallel);

}  // namespace posetfix
