#include "posetfix/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "posetfix/kernels.hpp"

namespace posetfix {

namespace {

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

std::string set_to_string(const Poset& p, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += p.label(s[i]);
  }
  return out + "}";
}

// First element of the symmetric difference, with its side.
std::optional<std::string> set_mismatch(const Poset& p, const Subset& engine,
                                        const Subset& oracle) {
  if (engine == oracle) return std::nullopt;
  Subset only_engine, only_oracle;
  std::set_difference(engine.begin(), engine.end(), oracle.begin(),
                      oracle.end(), std::back_inserter(only_engine));
  std::set_difference(oracle.begin(), oracle.end(), engine.begin(),
                      engine.end(), std::back_inserter(only_oracle));
  std::ostringstream os;
  os << "engine " << set_to_string(p, engine) << " vs brute force "
     << set_to_string(p, oracle);
  if (!only_engine.empty())
    os << "; engine extra: " << p.label(only_engine.front());
  if (!only_oracle.empty())
    os << "; engine missing: " << p.label(only_oracle.front());
  return os.str();
}

struct PrecondStatus {
  bool chain_complete = false;
  bool lattice = false;
  bool isotone = true;
  bool commutative = true;
  std::string defects;  // comma-separated unmet hypotheses

  void add_defect(const std::string& d) {
    if (!defects.empty()) defects += ", ";
    defects += d;
  }
};

PrecondStatus family_status(const Poset& p, const Family& fam) {
  PrecondStatus st;
  st.chain_complete = is_chain_complete(p);
  st.lattice = is_complete_lattice(p);
  if (!st.chain_complete) st.add_defect("not-chain-complete");
  for (const MapTable& f : fam.maps)
    if (!is_isotone(p, f)) {
      st.isotone = false;
      st.add_defect("not-isotone (" + f.name + ")");
      break;
    }
  if (auto w = find_noncommuting(fam)) {
    st.commutative = false;
    st.add_defect("not-commutative (" + fam[w->f].name + ", " +
                  fam[w->g].name + " at " + p.label(w->x) + ")");
  }
  return st;
}

Verdict make_verdict(Claim claim, bool preconds_met, bool outcome,
                     std::optional<std::string> witness, std::string note) {
  Verdict v;
  v.claim = claim;
  v.preconds_met = preconds_met;
  if (preconds_met) {
    v.holds = outcome;
    if (!outcome) v.witness = std::move(witness);
  } else {
    v.holds = true;  // vacuous
    v.empirical = outcome;
    if (!outcome) v.witness = std::move(witness);
  }
  v.note = std::move(note);
  return v;
}

// Shared body of the two structure claims: non-empty fix set with a least
// element, plus the claim-specific structure of the induced poset.
std::optional<std::string> structure_defect(const Poset& p, const Subset& fix,
                                            bool need_complete_lattice) {
  if (fix.empty()) return "joint fix set is empty";
  Poset induced = induced_subposet(p, fix);
  if (!induced.bottom()) return "induced fix poset has no least element";
  if (need_complete_lattice && !is_complete_lattice(induced)) {
    for (Elem a = 0; a < induced.size(); ++a)
      for (Elem b = a + 1; b < induced.size(); ++b) {
        if (!join(induced, a, b))
          return "induced fix poset: no join of " + induced.label(a) +
                 " and " + induced.label(b);
        if (!meet(induced, a, b))
          return "induced fix poset: no meet of " + induced.label(a) +
                 " and " + induced.label(b);
      }
    return "induced fix poset is not a complete lattice";
  }
  if (!need_complete_lattice && !is_chain_complete(induced))
    return "induced fix poset is not chain-complete";
  return std::nullopt;
}

}  // namespace

const char* claim_name(Claim c) {
  switch (c) {
    case Claim::tarski_i: return "tarski-i";
    case Claim::markowsky_ii: return "markowsky-ii";
    case Claim::approx_iii_eq1: return "approx-iii-eq1";
    case Claim::approx_iii_eq2: return "approx-iii-eq2";
    case Claim::kleene_eq3: return "kleene-eq3";
    case Claim::seeds_eq4: return "seeds-eq4";
    case Claim::ext_equality_eq5: return "ext-equality-eq5";
    case Claim::orbit_directed: return "orbit-directed";
  }
  return "unknown";
}

Subset brute_force_fixed_points(const Poset& p, const Family& fam, Exec exec) {
  if (fam.maps.empty())
    throw PosetError(Errc::bad_spec, "family must be non-empty");
  std::vector<const Elem*> tables;
  tables.reserve(fam.maps.size());
  for (const MapTable& f : fam.maps) {
    if (f.size() != p.size())
      throw PosetError(Errc::poset_mismatch,
                       "map \"" + f.name + "\" does not match the carrier size");
    tables.push_back(f.table.data());
  }
  const int n = p.size();
  std::vector<std::uint8_t> mask(n, 0);
  kernels::fixed_mask(tables, n, mask.data(), exec);
  Subset fix;
  for (Elem x = 0; x < n; ++x)
    if (mask[x]) fix.push_back(x);
  return fix;
}

std::vector<Verdict> verify_structure(const Poset& p, const Family& fam) {
  Subset fix = brute_force_fixed_points(p, fam);
  PrecondStatus st = family_status(p, fam);

  auto tarski_defect = structure_defect(p, fix, /*need_complete_lattice=*/true);
  auto markowsky_defect =
      structure_defect(p, fix, /*need_complete_lattice=*/false);

  std::vector<Verdict> out;
  const struct {
    Claim claim;
    bool structural;  // complete lattice vs chain-complete hypothesis on X
    const std::optional<std::string>* defect;
  } claims[] = {
      {Claim::tarski_i, true, &tarski_defect},
      {Claim::markowsky_ii, false, &markowsky_defect},
  };
  for (const auto& c : claims) {
    bool base = (c.structural ? st.lattice : st.chain_complete) && st.isotone;
    std::string base_note =
        c.structural ? "hypotheses: complete lattice, isotone maps"
                     : "hypotheses: chain-complete poset, isotone maps";
    // As printed, Theorem 1 also assumes commutativity; the classical
    // per-map results do not. Both readings are reported.
    for (bool strict : {true, false}) {
      bool met = base && (!strict || st.commutative);
      std::string note = base_note;
      note += strict ? ", commutative family (as printed)"
                     : " (classical reading, commutativity not required)";
      if (!met) note += "; unmet: " + st.defects;
      out.push_back(
          make_verdict(c.claim, met, !c.defect->has_value(), *c.defect, note));
    }
  }
  return out;
}

std::vector<Verdict> verify_approximation(const Poset& p, const Family& fam,
                                          Exec exec) {
  PrecondStatus st = family_status(p, fam);
  const bool met = st.chain_complete && st.isotone && st.commutative;
  const std::string note = met ? "" : "not asserted; unmet: " + st.defects;

  Subset brute = brute_force_fixed_points(p, fam, exec);
  SolveOptions run;
  run.skip_precondition_checks = true;
  run.exec = exec;

  std::vector<Verdict> out;

  {  // engine fix set vs brute force
    bool ok = false;
    std::optional<std::string> witness;
    try {
      FixReport rep = joint_fixed_points(p, fam, run);
      witness = set_mismatch(p, rep.fix_set, brute);
      ok = !witness;
    } catch (const PosetError& e) {
      witness = e.what();
    }
    out.push_back(make_verdict(Claim::approx_iii_eq1, met, ok, witness, note));
  }

  {  // engine least vs minimum of the brute-force set
    bool ok = false;
    std::optional<std::string> witness;
    try {
      Elem least = least_joint_fixed_point(p, fam, run);
      auto bmin = least_of(p, brute);
      if (!bmin) {
        witness = "brute-force fix set " + set_to_string(p, brute) +
                  " has no least element";
      } else if (least != *bmin) {
        witness = "engine least " + p.label(least) + " vs brute-force least " +
                  p.label(*bmin);
      } else {
        ok = true;
      }
    } catch (const PosetError& e) {
      witness = e.what();
    }
    out.push_back(make_verdict(Claim::approx_iii_eq2, met, ok, witness, note));
  }

  {  // ext F = ext It F
    bool ok = false;
    std::optional<std::string> witness;
    try {
      ClosureSet cs = iteration_closure(fam);
      std::vector<MapTable> closure_maps;
      closure_maps.reserve(cs.members.size());
      for (const ClosureMember& m : cs.members) closure_maps.push_back(m.map);
      Family iterated{std::move(closure_maps)};
      Subset ext_f = extensivity_domain(p, fam, exec);
      Subset ext_it = extensivity_domain(p, iterated, exec);
      if (ext_f == ext_it) {
        ok = true;
      } else {
        witness = "ext F = " + set_to_string(p, ext_f) +
                  " vs ext It F = " + set_to_string(p, ext_it);
      }
    } catch (const PosetError& e) {
      witness = e.what();
    }
    out.push_back(make_verdict(Claim::ext_equality_eq5, met, ok, witness, note));
  }

  {  // orbits from the extensivity domain are directed
    // Directedness is about the bare set; a missing supremum is eq1's
    // business, so orbit_members is used rather than orbit_reach.
    bool ok = true;
    std::optional<std::string> witness;
    for (Elem x : extensivity_domain(p, fam, exec)) {
      Subset orb = orbit_members(p, fam, x);
      if (!is_directed(p, orb)) {
        ok = false;
        witness = "orbit of " + p.label(x) + " = " + set_to_string(p, orb) +
                  " is not directed";
        break;
      }
    }
    out.push_back(make_verdict(Claim::orbit_directed, met, ok, witness, note));
  }

  if (fam.size() == 1) {
    const MapTable& f = fam[0];
    {  // Kleene iterate from bottom agrees with the least joint fixed point
      bool ok = false;
      std::optional<std::string> witness;
      try {
        FixReport k = kleene_iterate(p, f, std::nullopt, run);
        Elem least = least_joint_fixed_point(p, fam, run);
        if (k.fix_set.front() == least) {
          ok = true;
        } else {
          witness = "kleene limit " + p.label(k.fix_set.front()) +
                    " vs least joint fixed point " + p.label(least);
        }
      } catch (const PosetError& e) {
        witness = e.what();
      }
      out.push_back(make_verdict(Claim::kleene_eq3, met, ok, witness, note));
    }
    {  // per-seed Kleene limits enumerate the whole fix set
      bool ok = false;
      std::optional<std::string> witness;
      try {
        FixReport rep = fixed_points_single(p, f, run);
        witness = set_mismatch(p, rep.fix_set, brute);
        ok = !witness;
      } catch (const PosetError& e) {
        witness = e.what();
      }
      out.push_back(make_verdict(Claim::seeds_eq4, met, ok, witness, note));
    }
  }
  return out;
}

}  // namespace posetfix
