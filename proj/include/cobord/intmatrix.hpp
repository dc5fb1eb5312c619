#ifndef COBORD_INTMATRIX_HPP
#define COBORD_INTMATRIX_HPP

#include <vector>

#include "cobord/numeric.hpp"

namespace cobord {

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void add_row_multiple(int dst, int src, const Int& k);    // row dst += k * row src
  void add_col_multiple(int dst, int src, const Int& k);
  void negate_row(int r);
  void negate_col(int c);

  Int determinant() const; // exact, fraction-free elimination

  bool is_zero() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithResult {
  IntMatrix u, d, v;
  std::vector<Int> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Canonical data for an integer lattice spanned by row vectors in Z^n:
// the Hermite-form basis, a reducer onto unique coset representatives and
// the torsion invariants of the quotient Z^n / lattice.
class LatticeNF {
public:
  LatticeNF() = default;
  LatticeNF(const std::vector<std::vector<Int>>& vectors, int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int rank() const { return static_cast<int>(basis_.rows()); }
  int quotient_free_rank() const { return ambient_dim_ - rank(); }
  const IntMatrix& basis() const { return basis_; } // HNF rows, pivots positive

  // Unique representative of v modulo the lattice; identity map for the
  // empty lattice. reduce is idempotent and Z-linear modulo the lattice.
  std::vector<Int> reduce(const std::vector<Int>& v) const;

  // Invariant factors > 1 of the quotient's torsion subgroup.
  const std::vector<Int>& torsion() const { return torsion_; }

private:
  int ambient_dim_ = 0;
  IntMatrix basis_;                 // row HNF, one row per pivot
  std::vector<int> pivot_col_;      // pivot column of each basis row
  std::vector<Int> torsion_;
};

} // namespace cobord

#endif
