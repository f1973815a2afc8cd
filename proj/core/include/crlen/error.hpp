#pragma once

#include <stdexcept>
#include <string>

namespace crlen {

// Error conditions surfaced by the library.  Construction and analysis
// failures carry one of these codes plus a human-readable detail message.
enum class ErrorCode {
  non_associative,
  index_out_of_range,
  empty_generator_set,
  not_regular,
  not_idempotent_in_class,
  no_linking_pair,
  size_mismatch,
  not_closed,
  no_identity,
  no_inverse,
  element_outside_group,
  not_normal,
  not_abelian,
  not_prime_or_zero,
  no_meet,
  not_proper_nontrivial,
  too_large,
  unsupported_field_size,
  unknown_name,
  not_a_semilattice,
  parse_error,
  internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace crlen
