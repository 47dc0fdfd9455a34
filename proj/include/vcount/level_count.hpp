#pragma once

#include <vector>

#include "vcount/finite_field.hpp"
#include "vcount/smith.hpp"
#include "vcount/staircase.hpp"

namespace vcount {

/// One surviving affine constraint: sum coeffs[i] * u_i = rhs over (F_q^*)^k.
struct LevelEquation {
  std::vector<Fq> coeffs;
  Fq rhs;
};

/// Everything the H computation needs at one deletion level: the surviving
/// coefficient blocks (in deletion-matrix row order, equation 1 first), the
/// deletion matrix with its Smith data, and the stranded-condition flag for
/// an equation whose monomials were all deleted.
struct LevelInstance {
  int level = 0;
  int cutoff = 0;
  IntMat deletion;
  SmithDecomposition dec;
  std::vector<LevelEquation> equations;
  bool requires_b2_zero = false;
  bool consistent = true;
};

LevelInstance build_level_instance(const StaircaseSystem& sys, const StaircaseShape& shape,
                                   int level);

/// Number of tuples u on the surviving affine equations whose index vector
/// passes the Smith divisibility conditions with modulus q-1 (equivalently:
/// for which the level's monomial system is solvable).  0 for an
/// inconsistent instance.
Int compute_h(const LevelInstance& inst, const FiniteField& field);

/// L = H * (q-1)^(cutoff - rank) * prod gcd(q-1, d_j): tuples on the
/// constraints times monomial-system solutions per tuple.
Int compute_l(const LevelInstance& inst, const Int& h, const FiniteField& field);

/// Enumeration work for one level: prod (q-1)^(k_i - 1) over the surviving
/// equations.  The CLI warns when this gets large.
Int level_enumeration_cost(const StaircaseShape& shape, int level, const Int& q);

}  // namespace vcount
