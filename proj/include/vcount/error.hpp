#pragma once

#include <stdexcept>
#include <string>

namespace vcount {

enum class Errc {
  not_prime,
  even_characteristic,
  reducible_modulus,
  degree_mismatch,
  zero_has_no_index,
  shape_mismatch,
  budget_exceeded,
  dimension_mismatch,
  hypothesis_violated,
  invalid_system,
  parse_error,
  bad_argument,
};

const char* errc_name(Errc code);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace vcount
