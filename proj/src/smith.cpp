#include "vcount/smith.hpp"

#include <cassert>

#include "vcount/error.hpp"

namespace vcount {

namespace {

// Minimal-|entry| nonzero pivot in d(t.., t..); ties broken by lowest row,
// then lowest column.  Returns false when the submatrix is zero.
bool find_pivot(const IntMat& d, Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) {
  bool found = false;
  Int best;
  for (Eigen::Index i = t; i < d.rows(); ++i) {
    for (Eigen::Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

}  // namespace

IntMat SmithDecomposition::form(Eigen::Index rows, Eigen::Index cols) const {
  IntMat d = IntMat::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rank(); ++i) d(i, i) = factors[static_cast<std::size_t>(i)];
  return d;
}

SmithDecomposition snf(const IntMat& e) {
  const Eigen::Index rows = e.rows();
  const Eigen::Index cols = e.cols();
  IntMat d = e;
  SmithDecomposition dec;
  dec.u = IntMat::Identity(rows, rows);
  dec.v = IntMat::Identity(cols, cols);

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    Eigen::Index pr = t, pc = t;
    if (!find_pivot(d, t, pr, pc)) break;  // remaining block is zero
    if (pr != t) {
      d.row(t).swap(d.row(pr));
      dec.u.row(t).swap(dec.u.row(pr));
    }
    if (pc != t) {
      d.col(t).swap(d.col(pc));
      dec.v.col(t).swap(dec.v.col(pc));
    }

    while (true) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int f = d(i, t) / d(t, t);  // truncated: remainder strictly smaller
        if (f != 0) {
          d.row(i) -= f * d.row(t);
          dec.u.row(i) -= f * dec.u.row(t);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int f = d(t, j) / d(t, t);
        if (f != 0) {
          d.col(j) -= f * d.col(t);
          dec.v.col(j) -= f * dec.v.col(t);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Residues remain; move the new minimum into the corner and repeat.
        if (!find_pivot(d, t, pr, pc)) break;
        if (pr != t) {
          d.row(t).swap(d.row(pr));
          dec.u.row(t).swap(dec.u.row(pr));
        }
        if (pc != t) {
          d.col(t).swap(d.col(pc));
          dec.v.col(t).swap(dec.v.col(pc));
        }
        continue;
      }
      // Row and column are clean; enforce that the pivot divides the rest of
      // the submatrix, pulling a bad row up when it does not.
      bool fixed = true;
      for (Eigen::Index i = t + 1; i < rows && fixed; ++i) {
        for (Eigen::Index j = t + 1; j < cols && fixed; ++j) {
          if (!divides(d(t, t), d(i, j))) {
            d.row(t) += d.row(i);
            dec.u.row(t) += dec.u.row(i);
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }

    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      dec.u.row(t) = -dec.u.row(t);
    }
  }

  for (Eigen::Index t = 0; t < steps; ++t) {
    if (d(t, t) == 0) break;
    dec.factors.push_back(d(t, t));
  }
  assert(mat_equal(d, dec.form(rows, cols)));
  return dec;
}

bool verify_decomposition(const IntMat& e, const SmithDecomposition& dec) {
  if (dec.u.rows() != e.rows() || dec.u.cols() != e.rows() || dec.v.rows() != e.cols() ||
      dec.v.cols() != e.cols())
    fail(Errc::shape_mismatch, "transform shapes do not match the matrix");
  if (dec.rank() > std::min(e.rows(), e.cols())) return false;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    if (dec.factors[i] < 1) return false;
    if (i + 1 < dec.factors.size() && !divides(dec.factors[i], dec.factors[i + 1])) return false;
  }
  Int du = determinant(dec.u);
  Int dv = determinant(dec.v);
  if (abs(du) != 1 || abs(dv) != 1) return false;
  IntMat product = dec.u * e * dec.v;
  return mat_equal(product, dec.form(e.rows(), e.cols()));
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) fail(Errc::shape_mismatch, "determinant needs a square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = exact_div(num, prev);  // Bareiss: division is exact
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace vcount
