#include "emb6/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace emb6 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("IntMatrix::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("IntMatrix::from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  IntVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << emb6::to_string(row(i));
  }
  os << ']';
  return os.str();
}

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(invariant_factors.begin(), invariant_factors.end(),
                    [](const Integer& d) { return d != 0; }));
}

std::optional<Integer> AbelianGroupShape::order() const {
  if (free_rank != 0) return std::nullopt;
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string AbelianGroupShape::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the block [from, rows) x [from, cols), first in
// row-major order among equals.
std::optional<Position> smallest_entry(const IntMatrix& d, std::size_t from) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = from; i < d.rows(); ++i)
    for (std::size_t j = from; j < d.cols(); ++j) {
      const Integer& x = d(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!best || ax < best_abs) {
        best = Position{i, j};
        best_abs = std::move(ax);
      }
    }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Reduces h to row Hermite form in place; returns the rank. When `transform`
// is given it accumulates the row operations so that transform * h0 = h.
std::size_t hermite_in_place(IntMatrix& h, IntMatrix* transform) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    bool has_pivot = false;
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t k = pivot_row; k < h.rows(); ++k) {
        if (h(k, col) == 0) continue;
        if (!best || abs(h(k, col)) < abs(h(*best, col))) best = k;
      }
      if (!best) break;
      has_pivot = true;
      h.swap_rows(pivot_row, *best);
      if (transform) transform->swap_rows(pivot_row, *best);
      bool cleared = true;
      for (std::size_t k = pivot_row + 1; k < h.rows(); ++k) {
        if (h(k, col) == 0) continue;
        Integer q = h(k, col) / h(pivot_row, col);
        h.add_row_multiple(k, pivot_row, -q);
        if (transform) transform->add_row_multiple(k, pivot_row, -q);
        if (h(k, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      if (transform) transform->negate_row(pivot_row);
    }
    const Integer p = h(pivot_row, col);
    for (std::size_t k = 0; k < pivot_row; ++k) {
      Integer q = floor_div(h(k, col), p);
      h.add_row_multiple(k, pivot_row, -q);
      if (transform) transform->add_row_multiple(k, pivot_row, -q);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  const std::size_t diag = std::min(m, n);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      auto pivot = smallest_entry(d, t);
      if (!pivot) break;
      d.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column t are clear; the pivot must divide the rest of the block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      d.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out{std::move(u), std::move(d), std::move(v), {}};
  out.invariant_factors.reserve(diag);
  for (std::size_t t = 0; t < diag; ++t) out.invariant_factors.push_back(out.D(t, t));
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t r = hermite_in_place(h, nullptr);
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  // T * a^T = H; rows of T beyond rank(H) span the left kernel of a^T.
  IntMatrix h = a.transpose();
  IntMatrix t = IntMatrix::identity(a.cols());
  const std::size_t r = hermite_in_place(h, &t);
  std::vector<IntVector> rows;
  for (std::size_t k = r; k < a.cols(); ++k) rows.push_back(t.row(k));
  IntMatrix canonical = hermite_normal_form(IntMatrix::from_rows(rows, a.cols()));
  std::vector<IntVector> out;
  out.reserve(canonical.rows());
  for (std::size_t k = 0; k < canonical.rows(); ++k) out.push_back(canonical.row(k));
  return out;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix h = a;
  return hermite_in_place(h, nullptr);
}

AbelianGroupShape cokernel_shape(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  AbelianGroupShape shape;
  shape.free_rank = a.rows() - snf.rank();
  for (const auto& d : snf.invariant_factors)
    if (d > 1) shape.torsion.push_back(d);
  return shape;
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<IntVector> solve_in_lattice(const IntMatrix& g, const IntVector& v) {
  if (v.size() != g.rows()) throw DimensionError("solve_in_lattice: vector length differs from generator rows");
  const SmithDecomposition snf = smith_normal_form(g);
  const IntVector w = snf.U * v;
  IntVector y(g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const Integer d = i < snf.invariant_factors.size() ? snf.invariant_factors[i] : Integer(0);
    if (d == 0) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    if (w[i] % d != 0) return std::nullopt;
    y[i] = w[i] / d;
  }
  return snf.V * y;
}

IntMatrix lattice_basis(const IntMatrix& g) {
  return hermite_normal_form(g.transpose()).transpose();
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("same_lattice: ambient dimensions differ");
  return lattice_basis(a) == lattice_basis(b);
}

AbelianGroupShape quotient_shape(const IntMatrix& ambient_basis, const IntMatrix& sub_generators) {
  if (ambient_basis.rows() != sub_generators.rows())
    throw DimensionError("quotient_shape: ambient and generators live in different dimensions");
  if (rank(ambient_basis) != ambient_basis.cols())
    throw std::invalid_argument("quotient_shape: ambient basis columns are dependent");
  IntMatrix coords(ambient_basis.cols(), sub_generators.cols());
  for (std::size_t j = 0; j < sub_generators.cols(); ++j) {
    auto c = solve_in_lattice(ambient_basis, sub_generators.column(j));
    if (!c)
      throw std::invalid_argument("quotient_shape: generator " + to_string(sub_generators.column(j)) +
                                  " lies outside the ambient lattice");
    for (std::size_t i = 0; i < c->size(); ++i) coords(i, j) = (*c)[i];
  }
  return cokernel_shape(coords);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (!u.is_square()) throw DimensionError("unimodular_inverse: matrix is not square");
  const std::size_t n = u.rows();
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n);
    e[j] = 1;
    auto c = solve_in_lattice(u, e);
    if (!c) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*c)[i];
  }
  return inv;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace emb6
