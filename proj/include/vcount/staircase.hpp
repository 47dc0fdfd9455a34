#pragma once

#include <array>
#include <string>
#include <vector>

#include "vcount/finite_field.hpp"
#include "vcount/int_types.hpp"
#include "vcount/poly_system.hpp"

namespace vcount {

/// Two-equation staircase system: each equation's monomials come in two
/// blocks, the first supported on x_1..x_{n_low}, the second on
/// x_1..x_{n_high}, with every active exponent strictly positive.
struct StaircaseSystem {
  FiniteField field;
  std::vector<Fq> coeffs1;  // a_{1,1}..a_{1,r2}
  std::vector<Fq> coeffs2;  // a_{2,1}..a_{2,r4}
  IntMat exps1;             // r2 x ambient exponent rows
  IntMat exps2;             // r4 x ambient
  Fq b1;
  Fq b2;
};

struct StaircaseShape {
  int r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
  int ambient = 0;  // max(n2, n4)
};

/// Empty result means the system is a valid staircase; otherwise each entry
/// names the offending row/column or parameter.
std::vector<std::string> validate(const StaircaseSystem& sys);

/// Derives (r1..r4, n1..n4) from the exponent rows; throws invalid_system
/// with the validate() violations when the shape does not hold.
StaircaseShape staircase_shape(const StaircaseSystem& sys);

enum class Block { e11, e12, e21, e22 };

/// One exponent block at full ambient width.
IntMat block_matrix(const StaircaseSystem& sys, const StaircaseShape& shape, Block which);

/// (E11, E12, E21, E22) at full ambient width.
std::array<IntMat, 4> block_matrices(const StaircaseSystem& sys, const StaircaseShape& shape);

/// Exponent matrix of the monomials that survive deleting every variable
/// past the level cutoff (n_1..n_4 for level 1..4), truncated to cutoff
/// columns.  Computed both from the literal case table and from the
/// support-based characterization; a disagreement between the two throws.
IntMat deletion_matrix(const StaircaseSystem& sys, const StaircaseShape& shape, int level);

int level_cutoff(const StaircaseShape& shape, int level);

/// The same variety as a two-polynomial PolySystem (terms plus -b constants).
PolySystem to_poly_system(const StaircaseSystem& sys);

}  // namespace vcount
