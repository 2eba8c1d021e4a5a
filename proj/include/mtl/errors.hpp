#pragma once

#include <stdexcept>
#include <string>

namespace mtl {

// Machine-readable failure reasons.  The CLI maps these onto exit codes and
// prints the code string in its error documents.
enum class Reason {
  out_of_range,
  axiom_violation,
  trivial_chain,
  not_idempotent,
  not_locally_unital,
  not_a_filter,
  not_exact,
  malformed_spec,
  conditions_failed,
  assembled_not_mtl,
  empty_family,
  component_too_small,
  unknown_claim,
};

const char* reason_code(Reason r);

class Error : public std::runtime_error {
 public:
  Error(Reason reason, const std::string& what, int witness = -1)
      : std::runtime_error(what), reason_(reason), witness_(witness) {}

  Reason reason() const { return reason_; }
  const char* code() const { return reason_code(reason_); }

  // Offending index when there is one (e.g. the idempotent that is not a
  // local unit), -1 otherwise.
  int witness() const { return witness_; }

 private:
  Reason reason_;
  int witness_;
};

}  // namespace mtl
