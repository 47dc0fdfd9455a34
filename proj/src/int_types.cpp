#include "vcount/int_types.hpp"

#include "vcount/error.hpp"

namespace vcount {

Int exact_div(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::bad_argument, "division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) fail(Errc::bad_argument, "division expected to be exact has remainder");
  return q;
}

bool mat_equal(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace vcount
