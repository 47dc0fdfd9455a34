#include "vcount/staircase.hpp"

#include <numeric>

#include "vcount/error.hpp"

namespace vcount {

namespace {

// Support length of one exponent row: the last column with a positive entry,
// provided every earlier column is positive too; 0 flags a broken row.
struct RowSupport {
  int length = 0;
  bool dense = true;
  int bad_col = 0;  // 1-based column that breaks density (when !dense)
};

RowSupport row_support(const IntMat& rows, Eigen::Index r) {
  RowSupport s;
  Eigen::Index last = -1;
  for (Eigen::Index j = rows.cols() - 1; j >= 0; --j) {
    if (rows(r, j) != 0) {
      last = j;
      break;
    }
  }
  s.length = static_cast<int>(last + 1);
  for (Eigen::Index j = 0; j <= last; ++j) {
    if (rows(r, j) <= 0) {
      s.dense = false;
      s.bad_col = static_cast<int>(j + 1);
      return s;
    }
  }
  return s;
}

// Checks one equation's rows for the two-block staircase pattern and fills in
// (block split, low width, high width).
void check_equation(const IntMat& exps, const std::vector<Fq>& coeffs, int eq,
                    std::vector<std::string>& out, int& split, int& low, int& high) {
  const std::string tag = "equation " + std::to_string(eq);
  if (exps.rows() < 2) {
    out.push_back(tag + ": needs at least two monomials (two staircase blocks)");
    return;
  }
  if (static_cast<Eigen::Index>(coeffs.size()) != exps.rows()) {
    out.push_back(tag + ": coefficient count does not match the monomial rows");
    return;
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] == fq_zero)
      out.push_back(tag + ", monomial " + std::to_string(i + 1) + ": zero coefficient");

  std::vector<int> support(static_cast<std::size_t>(exps.rows()));
  for (Eigen::Index r = 0; r < exps.rows(); ++r) {
    RowSupport s = row_support(exps, r);
    if (s.length == 0) {
      out.push_back(tag + ", monomial " + std::to_string(r + 1) + ": empty exponent row");
      return;
    }
    if (!s.dense) {
      out.push_back(tag + ", monomial " + std::to_string(r + 1) + ", column " +
                    std::to_string(s.bad_col) + ": non-positive exponent in active block");
      return;
    }
    support[static_cast<std::size_t>(r)] = s.length;
  }

  low = support[0];
  std::size_t i = 1;
  while (i < support.size() && support[i] == low) ++i;
  if (i == support.size()) {
    out.push_back(tag + ": only one block width (" + std::to_string(low) +
                  "); a staircase needs two");
    return;
  }
  split = static_cast<int>(i);
  high = support[i];
  if (high < low) {
    out.push_back(tag + ", monomial " + std::to_string(i + 1) +
                  ": block widths must increase (saw " + std::to_string(high) + " after " +
                  std::to_string(low) + ")");
    return;
  }
  for (; i < support.size(); ++i) {
    if (support[i] != high) {
      out.push_back(tag + ", monomial " + std::to_string(i + 1) + ": support width " +
                    std::to_string(support[i]) + " breaks the two-block pattern");
      return;
    }
  }
}

std::vector<Block> case_table_blocks(const StaircaseShape& s, int level) {
  // Literal transcription of the per-level block stacking rules.
  switch (level) {
    case 1:
      if (s.n1 < s.n3) return {Block::e11};
      return {Block::e11, Block::e21};
    case 2:
      if (s.n3 <= s.n2) {
        if (s.n2 < s.n4) return {Block::e11, Block::e12, Block::e21};
        return {Block::e11, Block::e12, Block::e21, Block::e22};
      }
      return {Block::e11, Block::e12};
    case 3:
      if (s.n3 < s.n2) return {Block::e11, Block::e21};
      return {Block::e11, Block::e12, Block::e21};
    case 4:
      if (s.n4 < s.n2) return {Block::e11, Block::e21, Block::e22};
      return {Block::e11, Block::e12, Block::e21, Block::e22};
    default:
      fail(Errc::bad_argument, "level must be 1..4");
  }
}

}  // namespace

std::vector<std::string> validate(const StaircaseSystem& sys) {
  std::vector<std::string> out;
  if (sys.exps1.cols() != sys.exps2.cols()) {
    out.push_back("equations use different ambient widths");
    return out;
  }
  int r1 = 0, n1 = 0, n2 = 0, r3 = 0, n3 = 0, n4 = 0;
  check_equation(sys.exps1, sys.coeffs1, 1, out, r1, n1, n2);
  check_equation(sys.exps2, sys.coeffs2, 2, out, r3, n3, n4);
  if (!out.empty()) return out;
  if (n1 > n3)
    out.push_back("n1 = " + std::to_string(n1) + " exceeds n3 = " + std::to_string(n3) +
                  "; equation order must satisfy n1 <= n3 (swap the equations)");
  int ambient = std::max(n2, n4);
  if (static_cast<int>(sys.exps1.cols()) != ambient)
    out.push_back("trailing unused columns: ambient width " +
                  std::to_string(sys.exps1.cols()) + " but max block width is " +
                  std::to_string(ambient));
  return out;
}

StaircaseShape staircase_shape(const StaircaseSystem& sys) {
  auto violations = validate(sys);
  if (!violations.empty()) {
    std::string msg = "not a valid staircase system:";
    for (const auto& v : violations) msg += "\n  - " + v;
    fail(Errc::invalid_system, msg);
  }
  StaircaseShape s;
  std::vector<std::string> unused;
  check_equation(sys.exps1, sys.coeffs1, 1, unused, s.r1, s.n1, s.n2);
  check_equation(sys.exps2, sys.coeffs2, 2, unused, s.r3, s.n3, s.n4);
  s.r2 = static_cast<int>(sys.exps1.rows());
  s.r4 = static_cast<int>(sys.exps2.rows());
  s.ambient = std::max(s.n2, s.n4);
  return s;
}

IntMat block_matrix(const StaircaseSystem& sys, const StaircaseShape& shape, Block which) {
  auto slice = [](const IntMat& m, int from, int count) {
    return IntMat(m.middleRows(from, count));
  };
  switch (which) {
    case Block::e11: return slice(sys.exps1, 0, shape.r1);
    case Block::e12: return slice(sys.exps1, shape.r1, shape.r2 - shape.r1);
    case Block::e21: return slice(sys.exps2, 0, shape.r3);
    case Block::e22: return slice(sys.exps2, shape.r3, shape.r4 - shape.r3);
  }
  fail(Errc::bad_argument, "unknown block");
}

std::array<IntMat, 4> block_matrices(const StaircaseSystem& sys, const StaircaseShape& shape) {
  return {block_matrix(sys, shape, Block::e11), block_matrix(sys, shape, Block::e12),
          block_matrix(sys, shape, Block::e21), block_matrix(sys, shape, Block::e22)};
}

int level_cutoff(const StaircaseShape& shape, int level) {
  switch (level) {
    case 1: return shape.n1;
    case 2: return shape.n2;
    case 3: return shape.n3;
    case 4: return shape.n4;
    default: fail(Errc::bad_argument, "level must be 1..4");
  }
}

IntMat deletion_matrix(const StaircaseSystem& sys, const StaircaseShape& shape, int level) {
  const int cutoff = level_cutoff(shape, level);

  // Route 1: literal case table.
  std::vector<IntMat> stack;
  Eigen::Index total_rows = 0;
  for (Block b : case_table_blocks(shape, level)) {
    stack.push_back(block_matrix(sys, shape, b));
    total_rows += stack.back().rows();
  }
  IntMat literal(total_rows, cutoff);
  Eigen::Index at = 0;
  for (const IntMat& part : stack) {
    literal.middleRows(at, part.rows()) = part.leftCols(cutoff);
    at += part.rows();
  }

  // Route 2: keep exactly the monomial rows supported within the cutoff.
  std::vector<Eigen::Index> keep1, keep2;
  auto supported = [cutoff](const IntMat& m, Eigen::Index r) {
    for (Eigen::Index j = cutoff; j < m.cols(); ++j)
      if (m(r, j) != 0) return false;
    return true;
  };
  for (Eigen::Index r = 0; r < sys.exps1.rows(); ++r)
    if (supported(sys.exps1, r)) keep1.push_back(r);
  for (Eigen::Index r = 0; r < sys.exps2.rows(); ++r)
    if (supported(sys.exps2, r)) keep2.push_back(r);
  IntMat filtered(static_cast<Eigen::Index>(keep1.size() + keep2.size()), cutoff);
  at = 0;
  for (Eigen::Index r : keep1) filtered.row(at++) = sys.exps1.row(r).head(cutoff);
  for (Eigen::Index r : keep2) filtered.row(at++) = sys.exps2.row(r).head(cutoff);

  if (!mat_equal(literal, filtered))
    fail(Errc::invalid_system,
         "deletion-matrix case table disagrees with the support characterization at level " +
             std::to_string(level));
  return literal;
}

PolySystem to_poly_system(const StaircaseSystem& sys) {
  PolySystem ps;
  ps.field = sys.field;
  ps.nvars = static_cast<std::uint32_t>(sys.exps1.cols());
  auto convert = [&](const std::vector<Fq>& coeffs, const IntMat& exps, Fq b) {
    Polynomial poly;
    for (Eigen::Index r = 0; r < exps.rows(); ++r) {
      PolyTerm term;
      term.coef = coeffs[static_cast<std::size_t>(r)];
      term.exponents.resize(static_cast<std::size_t>(exps.cols()));
      for (Eigen::Index j = 0; j < exps.cols(); ++j)
        term.exponents[static_cast<std::size_t>(j)] =
            static_cast<std::uint32_t>(exps(r, j).get_ui());
      poly.terms.push_back(std::move(term));
    }
    if (!(b == fq_zero)) {
      PolyTerm constant;
      constant.coef = sys.field.neg(b);
      constant.exponents.assign(ps.nvars, 0);
      poly.terms.push_back(std::move(constant));
    }
    return poly;
  };
  ps.polys.push_back(convert(sys.coeffs1, sys.exps1, sys.b1));
  ps.polys.push_back(convert(sys.coeffs2, sys.exps2, sys.b2));
  return ps;
}

}  // namespace vcount
