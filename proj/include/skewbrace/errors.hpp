#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace skewbrace {

// Failure kinds. The CLI maps these onto exit codes: malformed input vs
// a valid-input negative answer vs an exceeded search guard.
enum class errc {
  not_square,
  not_closed,
  no_identity_at_zero,
  no_inverse,
  not_associative,
  dot_not_group,
  circ_not_group,
  brace_axiom_fails,
  not_a_subgroup,
  not_an_ideal,
  not_an_action,
  not_admissible,
  bad_complement_pair,
  not_internal_sdp,
  not_regular,
  not_normalized,
  not_a_transversal,
  order_guard_exceeded,
  bad_primes,
  circ_mismatch,
  spec_invalid,
  bad_input,
};

class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool ok, errc code, const std::string& message) {
  if (!ok) fail(code, message);
}

// Postconditions backed by a theorem; a violation is a library bug, not
// a user error.
inline void ensure(bool ok, const std::string& message) {
  if (!ok) throw std::logic_error("internal invariant violated: " + message);
}

}  // namespace skewbrace
