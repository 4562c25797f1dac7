#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Smith and
// Hermite normal forms, kernels, cokernels and lattice membership.
//
// Matrices are dense and stored row-major. Empty shapes (0x0, 0xn, nx0) are
// legal everywhere and describe zero maps / trivial groups.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace emb6 {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Raised when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  /// Columns become the matrix columns; `rows` fixes the height when the list is empty.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal in divisibility-chain order.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Diagonal of D, length min(rows, cols); non-negative, zeros trailing.
  IntVector invariant_factors;

  std::size_t rank() const;
};

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... + Z/tk with t_i | t_{i+1}.
struct AbelianGroupShape {
  std::size_t free_rank = 0;
  IntVector torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Group order, or nullopt when infinite.
  std::optional<Integer> order() const;
  /// "0", "Z", "Z^2 + Z/2", "Z/3 + Z/6", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroupShape&, const AbelianGroupShape&) = default;
};

/// Deterministic Smith normal form. Pivot: smallest nonzero |entry| of the
/// active block, ties broken by row-major position.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row lattice of `a`: echelon rows with
/// positive pivots, entries above each pivot reduced into [0, pivot). Zero rows
/// are dropped, so the result has rank(a) rows.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Integer basis of {v : a v = 0}, one vector per entry, in Hermite-reduced form.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Shape of Z^rows / (column span of a).
AbelianGroupShape cokernel_shape(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Exact determinant (fraction-free elimination). Requires a square matrix.
Integer determinant(const IntMatrix& a);

/// Coefficients c with g * c = v when v lies in the column lattice of g.
std::optional<IntVector> solve_in_lattice(const IntMatrix& g, const IntVector& v);

/// Canonical basis of the column lattice of g, as columns (Hermite form).
IntMatrix lattice_basis(const IntMatrix& g);

/// True when the column lattices of a and b coincide.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Shape of L / S where L is spanned by the (independent) columns of
/// `ambient_basis` and S by the columns of `sub_generators`. Throws
/// std::invalid_argument when a generator is outside L or the basis is dependent.
AbelianGroupShape quotient_shape(const IntMatrix& ambient_basis, const IntMatrix& sub_generators);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

Integer dot(const IntVector& a, const IntVector& b);
Integer gcd_of(const IntVector& v);
std::string to_string(const IntVector& v);

}  // namespace emb6
