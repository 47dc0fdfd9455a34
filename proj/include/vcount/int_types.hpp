#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>

namespace Eigen {

// Glue so Eigen dense types can carry exact GMP integers.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace vcount {

/// Exact arbitrary-precision integer; all counting arithmetic runs on these.
using Int = mpz_class;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Sign-safe divisibility test: does d divide x?  (d = 0 only divides 0.)
inline bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; throws if the division leaves a remainder.
Int exact_div(const Int& num, const Int& den);

bool mat_equal(const IntMat& a, const IntMat& b);

}  // namespace vcount
