#include "vcount/congruence.hpp"

#include "vcount/error.hpp"

namespace vcount {

namespace {

void check_inputs(const CongruenceSystem& sys, const SmithDecomposition& dec) {
  if (sys.modulus < 2) fail(Errc::bad_argument, "modulus must be >= 2");
  if (sys.b.size() != sys.h.rows())
    fail(Errc::shape_mismatch, "right-hand side length does not match the coefficient rows");
  if (dec.u.rows() != sys.h.rows() || dec.v.rows() != sys.h.cols())
    fail(Errc::shape_mismatch, "decomposition does not match the coefficient matrix");
}

}  // namespace

IntVec transformed_rhs(const CongruenceSystem& sys, const SmithDecomposition& dec) {
  check_inputs(sys, dec);
  return dec.u * sys.b;
}

bool is_solvable(const CongruenceSystem& sys, const SmithDecomposition& dec) {
  IntVec bp = transformed_rhs(sys, dec);
  const Eigen::Index rank = dec.rank();
  for (Eigen::Index i = 0; i < bp.size(); ++i) {
    Int need = i < rank ? int_gcd(sys.modulus, dec.factors[static_cast<std::size_t>(i)])
                        : sys.modulus;
    if (!divides(need, bp(i))) return false;
  }
  return true;
}

Int solution_count(const CongruenceSystem& sys, const SmithDecomposition& dec) {
  if (!is_solvable(sys, dec)) return 0;
  const Eigen::Index n = sys.h.cols();
  const Eigen::Index rank = dec.rank();
  Int count = int_pow(sys.modulus, static_cast<unsigned long>(n - rank));
  for (const Int& d : dec.factors) count *= int_gcd(sys.modulus, d);
  return count;
}

}  // namespace vcount
