#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetfix/mapping.hpp"
#include "posetfix/poset.hpp"

namespace posetfix {

enum class Method {
  eq1_closure,
  eq2_bottom,
  eq3_kleene,
  eq4_seeds,
  round_robin,
  brute_force,
};

const char* method_name(Method m);

struct SolveOptions {
  // The theorem hypotheses are the contract; skipping converts guarantees
  // into best-effort computation with cycle_detected / no_supremum backstops.
  bool skip_precondition_checks = false;
  Exec exec = Exec::parallel;
  std::size_t max_closure = default_closure_budget;
};

struct OrbitResult {
  Elem seed = -1;
  Subset orbit;        // images of seed under all non-empty compositions
  Elem supremum = -1;  // sup of orbit over the whole carrier
  std::uint64_t applications = 0;
};

struct EngineStats {
  std::uint64_t seeds = 0;
  std::uint64_t applications = 0;
  std::uint64_t sweeps = 0;
  double seconds = 0.0;
};

struct FixReport {
  Subset fix_set;
  std::optional<Elem> least;
  std::vector<OrbitResult> per_seed;
  Method method = Method::eq1_closure;
  EngineStats stats;
  std::vector<Elem> trace;  // Kleene iterate sequence, start included
};

// Throws PreconditionError (chain-complete poset, isotone members,
// commutative family) or the family-shape errors, otherwise returns.
void check_joint_preconditions(const Poset& p, const Family& fam,
                               Exec exec = Exec::parallel);

// {x : x <= f(x) for every f in the family}.
Subset extensivity_domain(const Poset& p, const Family& fam,
                          Exec exec = Exec::parallel);

// Orbit as the image of x under every closure member.
OrbitResult orbit(const Poset& p, const ClosureSet& cs, Elem x);

// Same set by breadth-first reachability from {f(x)} under the generators;
// avoids materializing the closure.
OrbitResult orbit_reach(const Poset& p, const Family& fam, Elem x);

// Bare orbit set; unlike orbit_reach it does not require a supremum.
Subset orbit_members(const Poset& p, const Family& fam, Elem x);

// Joint fixed points as orbit suprema over the extensivity domain.
// Requires (checked unless skipped): poset chain-complete, every map isotone,
// family commutative.
FixReport joint_fixed_points(const Poset& p, const Family& fam,
                             const SolveOptions& opts = {});

// Orbit supremum of bottom; equals the minimum of the joint fixed points.
Elem least_joint_fixed_point(const Poset& p, const Family& fam,
                             const SolveOptions& opts = {});

// Iterates start, f(start), f(f(start)), ... until stationary. start
// defaults to bottom and must satisfy start <= f(start).
FixReport kleene_iterate(const Poset& p, const MapTable& f,
                         std::optional<Elem> start = std::nullopt,
                         const SolveOptions& opts = {});

// Fixed points of a single isotone map as Kleene limits from every
// extensive seed.
FixReport fixed_points_single(const Poset& p, const MapTable& f,
                              const SolveOptions& opts = {});

// Chaotic iteration: apply every family member in declaration order in
// sweeps until a sweep changes nothing. Agrees with orbit(x).supremum under
// the joint_fixed_points preconditions.
Elem round_robin_solve(const Poset& p, const Family& fam, Elem x,
                       const SolveOptions& opts = {});

}  // namespace posetfix
