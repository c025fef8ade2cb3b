#pragma once

#include <stdexcept>
#include <string>

namespace topdeg {

// Every failure mode the library reports, in one flat enum so the C API can
// map them to stable codes.
enum class Errc {
  composite_characteristic,
  unsupported_size,
  division_by_zero,
  syntax_error,
  unknown_variable,
  not_homogeneous,
  inexact_division,
  degree_overflow,
  no_stabilization,
  not_zero_dimensional,
  genericity_failure,
  not_dominant,
  degenerate_linear_system,
  characteristic_divides_degree,
  not_square_free,
  point_not_on_singular_locus,
  unsupported_dimension,
  positive_dimensional_base_locus,
  field_too_large,
  consistency_violation,
  usage_error,
  internal_error,
};

const char* errc_name(Errc c);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw AlgebraError(code, msg);
}

}  // namespace topdeg
