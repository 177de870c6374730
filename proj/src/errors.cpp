#include "posetfix/errors.hpp"

namespace posetfix {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_label: return "duplicate-label";
    case Errc::unknown_label: return "unknown-label";
    case Errc::unknown_element: return "unknown-element";
    case Errc::antisymmetry_violation: return "antisymmetry-violation";
    case Errc::not_reflexive: return "not-reflexive";
    case Errc::not_transitive: return "not-transitive";
    case Errc::empty_subset: return "empty-subset";
    case Errc::missing_assignment: return "missing-assignment";
    case Errc::poset_mismatch: return "poset-mismatch";
    case Errc::closure_budget_exceeded: return "closure-budget-exceeded";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::cycle_detected: return "cycle-detected";
    case Errc::no_supremum: return "no-supremum";
    case Errc::sweep_budget_exceeded: return "sweep-budget-exceeded";
    case Errc::not_a_lattice: return "not-a-lattice";
    case Errc::bad_spec: return "bad-spec";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown-error";
}

const char* precond_name(Precond which) {
  switch (which) {
    case Precond::chain_complete: return "not-chain-complete";
    case Precond::isotone: return "not-isotone";
    case Precond::commutative: return "not-commutative";
    case Precond::start_extensive: return "start-not-extensive";
  }
  return "unknown-precondition";
}

}  // namespace posetfix
