#include "cobord/intmatrix.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(errc::internal, "matrix product dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& k) {
  if (k == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& k) {
  if (k == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) fail(errc::internal, "determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  int n = rows_;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev; // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

// ----------------------------------------------------------------- SNF

namespace {

// Smallest nonzero |entry| in the trailing block, ties by (row, col).
bool find_pivot(const IntMatrix& d, int s, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int i = s; i < d.rows(); ++i)
    for (int j = s; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      Int a = abs(d.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult r;
  r.d = m;
  r.u = IntMatrix::identity(m.rows());
  r.v = IntMatrix::identity(m.cols());
  IntMatrix& d = r.d;
  int n = std::min(m.rows(), m.cols());

  for (int s = 0; s < n; ++s) {
    int pr = s, pc = s;
    if (!find_pivot(d, s, pr, pc)) break;
    d.swap_rows(s, pr);
    r.u.swap_rows(s, pr);
    d.swap_cols(s, pc);
    r.v.swap_cols(s, pc);

    // Clear row s and column s; restarts keep the pivot minimal so entries
    // stay small during reduction.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = s + 1; i < d.rows(); ++i) {
        if (d.at(i, s) == 0) continue;
        Int q = floor_div(d.at(i, s), d.at(s, s));
        d.add_row_multiple(i, s, -q);
        r.u.add_row_multiple(i, s, -q);
        if (d.at(i, s) != 0) { // remainder smaller than pivot: swap up, redo
          d.swap_rows(s, i);
          r.u.swap_rows(s, i);
          dirty = true;
        }
      }
      for (int j = s + 1; j < d.cols(); ++j) {
        if (d.at(s, j) == 0) continue;
        Int q = floor_div(d.at(s, j), d.at(s, s));
        d.add_col_multiple(j, s, -q);
        r.v.add_col_multiple(j, s, -q);
        if (d.at(s, j) != 0) {
          d.swap_cols(s, j);
          r.v.swap_cols(s, j);
          dirty = true;
        }
      }
    }

    if (d.at(s, s) < 0) {
      d.negate_row(s);
      r.u.negate_row(s);
    }

    // Divisibility fixup: if the pivot fails to divide a trailing entry,
    // fold that column in and redo this step.
    for (int i = s + 1; i < d.rows(); ++i)
      for (int j = s + 1; j < d.cols(); ++j)
        if (d.at(i, j) % d.at(s, s) != 0) {
          d.add_col_multiple(s, j, 1);
          r.v.add_col_multiple(s, j, 1);
          --s; // reprocess
          goto next_step;
        }
  next_step:;
  }
  return r;
}

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

// ----------------------------------------------------------------- HNF

LatticeNF::LatticeNF(const std::vector<std::vector<Int>>& vectors, int ambient_dim)
    : ambient_dim_(ambient_dim) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient_dim)
      fail(errc::parse, "lattice vector of wrong length");

  IntMatrix work(static_cast<int>(vectors.size()), ambient_dim);
  for (int i = 0; i < work.rows(); ++i)
    for (int j = 0; j < ambient_dim; ++j) work.at(i, j) = vectors[i][j];

  // Row Hermite normal form: positive pivots, entries above a pivot reduced
  // into [0, pivot).
  int row = 0;
  for (int col = 0; col < ambient_dim && row < work.rows(); ++col) {
    // gcd-eliminate below `row` in this column
    while (true) {
      int p = -1;
      Int best;
      for (int i = row; i < work.rows(); ++i) {
        if (work.at(i, col) == 0) continue;
        Int a = abs(work.at(i, col));
        if (p < 0 || a < best) {
          p = i;
          best = a;
        }
      }
      if (p < 0) break;
      work.swap_rows(row, p);
      if (work.at(row, col) < 0) work.negate_row(row);
      bool cleared = true;
      for (int i = row + 1; i < work.rows(); ++i) {
        if (work.at(i, col) == 0) continue;
        Int q = floor_div(work.at(i, col), work.at(row, col));
        work.add_row_multiple(i, row, -q);
        if (work.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (row < work.rows() && work.at(row, col) != 0) {
      // reduce entries above the pivot
      for (int i = 0; i < row; ++i) {
        Int q = floor_div(work.at(i, col), work.at(row, col));
        work.add_row_multiple(i, row, -q);
      }
      pivot_col_.push_back(col);
      ++row;
    }
  }

  basis_ = IntMatrix(row, ambient_dim);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < ambient_dim; ++j) basis_.at(i, j) = work.at(i, j);

  // Torsion invariants from the Smith form of the basis.
  if (row > 0) {
    auto snf = smith_normal_form(basis_);
    for (const Int& di : snf.diagonal())
      if (di > 1) torsion_.push_back(di);
  }
}

std::vector<Int> LatticeNF::reduce(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_)
    fail(errc::parse, "vector length does not match lattice ambient dimension");
  std::vector<Int> out = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int c = pivot_col_[i];
    Int q = floor_div(out[c], basis_.at(i, c));
    if (q == 0) continue;
    for (int j = 0; j < ambient_dim_; ++j) out[j] -= q * basis_.at(i, j);
  }
  return out;
}

} // namespace cobord
