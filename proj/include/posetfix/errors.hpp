#pragma once

#include <stdexcept>
#include <string>

namespace posetfix {

enum class Errc {
  duplicate_label,
  unknown_label,
  unknown_element,
  antisymmetry_violation,
  not_reflexive,
  not_transitive,
  empty_subset,
  missing_assignment,
  poset_mismatch,
  closure_budget_exceeded,
  precondition_violated,
  cycle_detected,
  no_supremum,
  sweep_budget_exceeded,
  not_a_lattice,
  bad_spec,
  parse_error,
};

const char* errc_name(Errc code);

class PosetError : public std::runtime_error {
 public:
  PosetError(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Which hypothesis of the joint-fixed-point theorems failed.
enum class Precond {
  chain_complete,
  isotone,
  commutative,
  start_extensive,
};

const char* precond_name(Precond which);

class PreconditionError : public PosetError {
 public:
  PreconditionError(Precond which, std::string message)
      : PosetError(Errc::precondition_violated, std::move(message)),
        which_(which) {}

  Precond which() const { return which_; }

 private:
  Precond which_;
};

}  // namespace posetfix
