#include "posetfix/fixpoint.hpp"

#include <algorithm>
#include <chrono>

#include "posetfix/kernels.hpp"

namespace posetfix {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<const Elem*> family_tables(const Family& fam) {
  std::vector<const Elem*> tables;
  tables.reserve(fam.size());
  for (const MapTable& f : fam.maps) tables.push_back(f.table.data());
  return tables;
}

void check_family(const Poset& p, const Family& fam) {
  if (fam.maps.empty())
    throw PosetError(Errc::bad_spec, "family must be non-empty");
  for (const MapTable& f : fam.maps) {
    if (f.size() != p.size())
      throw PosetError(Errc::poset_mismatch,
                       "map \"" + f.name + "\" does not match the carrier size");
    for (Elem y : f.table) p.check_elem(y);
  }
}

void check_theorem_preconditions(const Poset& p, const Family& fam, Exec exec) {
  if (!is_chain_complete(p))
    throw PreconditionError(Precond::chain_complete,
                            "poset has no least element");
  for (const MapTable& f : fam.maps) {
    if (auto v = isotone_violation(p, f, exec))
      throw PreconditionError(Precond::isotone,
                              "map \"" + f.name + "\" is not isotone: " +
                                  p.label(v->first) + " <= " +
                                  p.label(v->second) + " but images are not");
  }
  if (auto w = find_noncommuting(fam))
    throw PreconditionError(
        Precond::commutative,
        "maps \"" + fam[w->f].name + "\" and \"" + fam[w->g].name +
            "\" do not commute at " + p.label(w->x));
}

// Orbit set by reachability under the generators, without the supremum.
Subset orbit_set(const Poset& p, const Family& fam, Elem x,
                 std::uint64_t& applications) {
  const int n = p.size();
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<Elem> stack;
  for (const MapTable& f : fam.maps) {
    ++applications;
    Elem y = f.table[x];
    if (!visited[y]) {
      visited[y] = 1;
      stack.push_back(y);
    }
  }
  while (!stack.empty()) {
    Elem y = stack.back();
    stack.pop_back();
    for (const MapTable& f : fam.maps) {
      ++applications;
      Elem z = f.table[y];
      if (!visited[z]) {
        visited[z] = 1;
        stack.push_back(z);
      }
    }
  }
  Subset orbit;
  for (Elem y = 0; y < n; ++y)
    if (visited[y]) orbit.push_back(y);
  return orbit;
}

OrbitResult finish_orbit(const Poset& p, Elem seed, Subset orbit,
                         std::uint64_t applications) {
  auto sup = sup_subset(p, orbit);
  if (!sup)
    throw PosetError(Errc::no_supremum,
                     "orbit of " + p.label(seed) + " has no supremum");
  return OrbitResult{seed, std::move(orbit), *sup, applications};
}

// Least of s, or nullopt (minimal elements are not enough in a partial
// order).
std::optional<Elem> least_of(const Poset& p, const Subset& s) {
  for (Elem m : s) {
    bool below_all = true;
    for (Elem u : s)
      if (!p.leq_unchecked(m, u)) {
        below_all = false;
        break;
      }
    if (below_all) return m;
  }
  return std::nullopt;
}

// Runs fn(i) for every seed index, in parallel when asked; the first failure
// in index order is rethrown so results do not depend on the schedule.
template <typename Fn>
void for_each_seed(const Subset& seeds, Exec exec, Fn&& fn) {
  const long long count = static_cast<long long>(seeds.size());
  const bool par = exec == Exec::parallel && count >= 16;
  std::vector<std::exception_ptr> errors(seeds.size());
#pragma omp parallel for schedule(dynamic, 8) if (par)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (long long i = 0; i < count; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::eq1_closure: return "eq1-closure";
    case Method::eq2_bottom: return "eq2-bottom";
    case Method::eq3_kleene: return "eq3-kleene";
    case Method::eq4_seeds: return "eq4-seeds";
    case Method::round_robin: return "round-robin";
    case Method::brute_force: return "brute-force";
  }
  return "unknown";
}

void check_joint_preconditions(const Poset& p, const Family& fam, Exec exec) {
  check_family(p, fam);
  check_theorem_preconditions(p, fam, exec);
}

Subset extensivity_domain(const Poset& p, const Family& fam, Exec exec) {
  check_family(p, fam);
  const int n = p.size();
  std::vector<std::uint8_t> mask(n, 0);
  kernels::extensive_mask(p.relation_data(), family_tables(fam), n, mask.data(),
                          exec);
  Subset ext;
  for (Elem x = 0; x < n; ++x)
    if (mask[x]) ext.push_back(x);
  return ext;
}

OrbitResult orbit(const Poset& p, const ClosureSet& cs, Elem x) {
  p.check_elem(x);
  if (cs.members.empty())
    throw PosetError(Errc::bad_spec, "closure set is empty");
  Subset images;
  images.reserve(cs.members.size());
  for (const ClosureMember& m : cs.members) images.push_back(m.map.table[x]);
  return finish_orbit(p, x, make_subset(p, std::move(images)),
                      cs.members.size());
}

OrbitResult orbit_reach(const Poset& p, const Family& fam, Elem x) {
  check_family(p, fam);
  p.check_elem(x);
  std::uint64_t applications = 0;
  Subset orb = orbit_set(p, fam, x, applications);
  return finish_orbit(p, x, std::move(orb), applications);
}

Subset orbit_members(const Poset& p, const Family& fam, Elem x) {
  check_family(p, fam);
  p.check_elem(x);
  std::uint64_t applications = 0;
  return orbit_set(p, fam, x, applications);
}

FixReport joint_fixed_points(const Poset& p, const Family& fam,
                             const SolveOptions& opts) {
  const auto t0 = Clock::now();
  check_family(p, fam);
  if (!opts.skip_precondition_checks)
    check_theorem_preconditions(p, fam, opts.exec);

  FixReport report;
  report.method = Method::eq1_closure;
  Subset ext = extensivity_domain(p, fam, opts.exec);
  report.per_seed.resize(ext.size());
  for_each_seed(ext, opts.exec, [&](std::size_t i) {
    std::uint64_t apps = 0;
    Subset orb = orbit_set(p, fam, ext[i], apps);
    report.per_seed[i] = finish_orbit(p, ext[i], std::move(orb), apps);
  });

  Subset fix;
  fix.reserve(ext.size());
  for (const OrbitResult& r : report.per_seed) {
    fix.push_back(r.supremum);
    report.stats.applications += r.applications;
  }
  report.fix_set = make_subset(p, std::move(fix));
  report.stats.seeds = ext.size();

  if (auto b = p.bottom()) {
    auto it = std::lower_bound(ext.begin(), ext.end(), *b);
    if (it != ext.end() && *it == *b)
      report.least = report.per_seed[it - ext.begin()].supremum;
  }
  if (!report.least) report.least = least_of(p, report.fix_set);

  report.stats.seconds = seconds_since(t0);
  return report;
}

Elem least_joint_fixed_point(const Poset& p, const Family& fam,
                             const SolveOptions& opts) {
  check_family(p, fam);
  if (!opts.skip_precondition_checks)
    check_theorem_preconditions(p, fam, opts.exec);
  auto bottom = p.bottom();
  if (!bottom)
    throw PreconditionError(Precond::chain_complete,
                            "poset has no least element");
  return orbit_reach(p, fam, *bottom).supremum;
}

FixReport kleene_iterate(const Poset& p, const MapTable& f,
                         std::optional<Elem> start, const SolveOptions& opts) {
  const auto t0 = Clock::now();
  if (f.size() != p.size())
    throw PosetError(Errc::poset_mismatch,
                     "map \"" + f.name + "\" does not match the carrier size");
  for (Elem y : f.table) p.check_elem(y);

  Elem x0;
  if (start) {
    p.check_elem(*start);
    x0 = *start;
  } else {
    auto b = p.bottom();
    if (!b)
      throw PreconditionError(Precond::chain_complete,
                              "poset has no least element to start from");
    x0 = *b;
  }

  if (!opts.skip_precondition_checks) {
    if (auto v = isotone_violation(p, f, opts.exec))
      throw PreconditionError(Precond::isotone,
                              "map \"" + f.name + "\" is not isotone: " +
                                  p.label(v->first) + " <= " +
                                  p.label(v->second) + " but images are not");
    if (!p.leq_unchecked(x0, f.table[x0]))
      throw PreconditionError(Precond::start_extensive,
                              "start " + p.label(x0) + " is not below its image " +
                                  p.label(f.table[x0]));
  }

  FixReport report;
  report.method = Method::eq3_kleene;
  std::vector<int> first_seen(p.size(), -1);
  first_seen[x0] = 0;
  report.trace.push_back(x0);
  std::uint64_t apps = 0;
  Elem x = x0;
  for (;;) {
    Elem y = f.table[x];
    ++apps;
    if (y == x) break;
    if (first_seen[y] >= 0) {
      std::string cycle;
      for (std::size_t i = first_seen[y]; i < report.trace.size(); ++i)
        cycle += p.label(report.trace[i]) + " -> ";
      cycle += p.label(y);
      throw PosetError(Errc::cycle_detected, "iteration cycles: " + cycle);
    }
    first_seen[y] = static_cast<int>(report.trace.size());
    report.trace.push_back(y);
    x = y;
  }

  Subset orb;
  if (report.trace.size() == 1) {
    orb = {x0};
  } else {
    orb.assign(report.trace.begin() + 1, report.trace.end());
    orb = make_subset(p, std::move(orb));
  }
  report.per_seed.push_back(OrbitResult{x0, std::move(orb), x, apps});
  report.fix_set = {x};
  report.least = x;
  report.stats.seeds = 1;
  report.stats.applications = apps;
  report.stats.seconds = seconds_since(t0);
  return report;
}

FixReport fixed_points_single(const Poset& p, const MapTable& f,
                              const SolveOptions& opts) {
  const auto t0 = Clock::now();
  if (f.size() != p.size())
    throw PosetError(Errc::poset_mismatch,
                     "map \"" + f.name + "\" does not match the carrier size");
  for (Elem y : f.table) p.check_elem(y);

  if (!opts.skip_precondition_checks) {
    if (!is_chain_complete(p))
      throw PreconditionError(Precond::chain_complete,
                              "poset has no least element");
    if (auto v = isotone_violation(p, f, opts.exec))
      throw PreconditionError(Precond::isotone,
                              "map \"" + f.name + "\" is not isotone: " +
                                  p.label(v->first) + " <= " +
                                  p.label(v->second) + " but images are not");
  }

  const int n = p.size();
  std::vector<std::uint8_t> mask(n, 0);
  kernels::extensive_mask(p.relation_data(), {f.table.data()}, n, mask.data(),
                          opts.exec);
  Subset seeds;
  for (Elem x = 0; x < n; ++x)
    if (mask[x]) seeds.push_back(x);

  FixReport report;
  report.method = Method::eq4_seeds;
  report.per_seed.resize(seeds.size());

  SolveOptions inner = opts;
  inner.skip_precondition_checks = true;  // seeds are extensive by selection
  for_each_seed(seeds, opts.exec, [&](std::size_t i) {
    FixReport k = kleene_iterate(p, f, seeds[i], inner);
    report.per_seed[i] = k.per_seed[0];
  });

  Subset fix;
  fix.reserve(seeds.size());
  for (const OrbitResult& r : report.per_seed) {
    fix.push_back(r.supremum);
    report.stats.applications += r.applications;
  }
  report.fix_set = make_subset(p, std::move(fix));
  report.stats.seeds = seeds.size();

  if (auto b = p.bottom()) {
    auto it = std::lower_bound(seeds.begin(), seeds.end(), *b);
    if (it != seeds.end() && *it == *b)
      report.least = report.per_seed[it - seeds.begin()].supremum;
  }
  if (!report.least) report.least = least_of(p, report.fix_set);

  report.stats.seconds = seconds_since(t0);
  return report;
}

Elem round_robin_solve(const Poset& p, const Family& fam, Elem x,
                       const SolveOptions& opts) {
  check_family(p, fam);
  p.check_elem(x);
  if (!opts.skip_precondition_checks) {
    check_theorem_preconditions(p, fam, opts.exec);
    for (const MapTable& f : fam.maps)
      if (!p.leq_unchecked(x, f.table[x]))
        throw PreconditionError(Precond::start_extensive,
                                "seed " + p.label(x) +
                                    " is outside the extensivity domain");
  }

  const std::uint64_t budget =
      static_cast<std::uint64_t>(p.size()) * fam.size() + 1;
  Elem cur = x;
  for (std::uint64_t sweep = 0;; ++sweep) {
    if (sweep >= budget)
      throw PosetError(Errc::sweep_budget_exceeded,
                       "no stable element after " + std::to_string(budget) +
                           " sweeps from " + p.label(x));
    bool changed = false;
    for (const MapTable& f : fam.maps) {
      Elem nxt = f.table[cur];
      if (nxt != cur) changed = true;
      cur = nxt;
    }
    if (!changed) return cur;
  }
}

}  // namespace posetfix
