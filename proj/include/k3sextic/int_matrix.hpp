#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace k3sextic {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix over an exact GMP scalar (Int or Rat). Row-major, value
/// semantics; every algorithm below returns fresh matrices.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
      : rows_(rows), cols_(cols), entries_(entries) {
    if (entries_.size() != rows * cols)
      throw std::invalid_argument("matrix literal has wrong entry count");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap(entries_[i * cols_ + a], entries_[i * cols_ + b]);
  }

  // row[a] -= q * row[b]
  void submul_row(std::size_t a, const T& q, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      entries_[a * cols_ + j] -= q * entries_[b * cols_ + j];
  }

  // col[a] -= q * col[b]
  void submul_col(std::size_t a, const T& q, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i)
      entries_[i * cols_ + a] -= q * entries_[i * cols_ + b];
  }

  void add_row(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      entries_[a * cols_ + j] += entries_[b * cols_ + j];
  }

  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j)
      entries_[a * cols_ + j] = -entries_[a * cols_ + j];
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& e : entries_)
      if (e != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (a.entries_[k] != b.entries_[k]) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

inline bool is_integral(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() != 1) return false;
  return true;
}

// Precondition: is_integral(a).
inline IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1)
        throw std::invalid_argument("matrix entry is not an integer");
      r(i, j) = a(i, j).get_num();
    }
  return r;
}

// mpq_class(num, den) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form of the input
  IntMatrix u;  // unimodular, u * a = h
};

/// Row-style Hermite normal form: echelon shape, positive pivots, entries
/// above a pivot reduced into [0, pivot). Pivoting always picks a
/// minimal-absolute-value nonzero entry to limit coefficient growth.
inline HnfResult hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(m);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // gcd-reduce column `col` below `row` until one nonzero entry remains
    bool have_pivot = false;
    while (true) {
      std::size_t pivot = m;
      for (std::size_t r = row; r < m; ++r)
        if (h(r, col) != 0 && (pivot == m || cmp_abs(h(r, col), h(pivot, col)) < 0))
          pivot = r;
      if (pivot == m) break;
      have_pivot = true;
      h.swap_rows(pivot, row);
      u.swap_rows(pivot, row);
      bool clean = true;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (h(r, col) == 0) continue;
        Int q = floor_div(h(r, col), h(row, col));
        h.submul_row(r, q, row);
        u.submul_row(r, q, row);
        if (h(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t r = 0; r < row; ++r) {
      if (h(r, col) == 0) continue;
      Int q = floor_div(h(r, col), h(row, col));
      h.submul_row(r, q, row);
      u.submul_row(r, q, row);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

struct SnfResult {
  IntMatrix d;  // diagonal, nonnegative, d_1 | d_2 | ... followed by zeros
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, u * a * v = d
};

/// Smith normal form with minimal-absolute-value pivoting (naive pivots blow
/// up on rank-16 Gram matrices).
inline SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t lim = std::min(m, n);
  std::size_t t = 0;
  while (t < lim) {
    // minimal |entry| != 0 in the trailing block
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (pr == m || cmp_abs(d(i, j), d(pr, pc)) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;  // trailing block is zero
    d.swap_rows(pr, t);
    u.swap_rows(pr, t);
    d.swap_cols(pc, t);
    v.swap_cols(pc, t);

    bool dirty = false;
    for (std::size_t r = t + 1; r < m; ++r) {
      if (d(r, t) == 0) continue;
      Int q = floor_div(d(r, t), d(t, t));
      d.submul_row(r, q, t);
      u.submul_row(r, q, t);
      if (d(r, t) != 0) dirty = true;
    }
    for (std::size_t c = t + 1; c < n; ++c) {
      if (d(t, c) == 0) continue;
      Int q = floor_div(d(t, c), d(t, t));
      d.submul_col(c, q, t);
      v.submul_col(c, q, t);
      if (d(t, c) != 0) dirty = true;
    }
    if (dirty) continue;

    // pivot must divide the whole trailing block
    bool fixed = false;
    for (std::size_t r = t + 1; r < m && !fixed; ++r)
      for (std::size_t c = t + 1; c < n && !fixed; ++c)
        if (d(r, c) % d(t, t) != 0) {
          d.add_row(t, r);
          u.add_row(t, r);
          fixed = true;
        }
    if (fixed) continue;

    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return {std::move(d), std::move(u), std::move(v)};
}

/// Exact determinant by Bareiss fraction-free elimination.
inline Int determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix b = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r)
      if (b(r, k) != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return 0;
    if (pivot != k) {
      b.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = b(i, j) * b(k, k) - b(i, k) * b(k, j);
        mpz_divexact(b(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      b(i, k) = 0;
    }
    prev = b(k, k);
  }
  return sign * b(n - 1, n - 1);
}

/// Saturated basis (as rows, in HNF) of the integer kernel {x : a.x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  auto [h, u] = hermite_normal_form(transpose(a));
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (h.row_is_zero(r)) rows.push_back(u.row(r));
  if (rows.empty()) return IntMatrix(0, a.cols());
  return hermite_normal_form(IntMatrix::from_rows(rows)).h;
}

/// Exact solution of a.x = b over the rationals, or nullopt when the system
/// is inconsistent. Free variables (degenerate a) are set to zero; for square
/// nondegenerate a the solution is unique.
inline std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a,
                                                      const std::vector<Rat>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  RatMatrix w = a;
  std::vector<Rat> rhs = b;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = m;
    for (std::size_t r = row; r < m; ++r)
      if (w(r, col) != 0) {
        p = r;
        break;
      }
    if (p == m) continue;
    w.swap_rows(p, row);
    std::swap(rhs[p], rhs[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || w(r, col) == 0) continue;
      Rat f = w(r, col) / w(row, col);
      for (std::size_t j = col; j < n; ++j) w(r, j) -= f * w(row, j);
      rhs[r] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = rhs[r] / w(r, pivot_col[r]);
  return x;
}

inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a,
                                                      const std::vector<Rat>& b) {
  return solve_rational(to_rational(a), b);
}

/// Inverse of a square rational matrix, or nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix w = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = n;
    for (std::size_t r = col; r < n; ++r)
      if (w(r, col) != 0) {
        p = r;
        break;
      }
    if (p == n) return std::nullopt;
    w.swap_rows(p, col);
    inv.swap_rows(p, col);
    Rat d = w(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || w(r, col) == 0) continue;
      Rat f = w(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        w(r, j) -= f * w(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Rank over the rationals.
inline std::size_t rational_rank(const IntMatrix& a) {
  const auto& h = hermite_normal_form(a).h;
  std::size_t r = 0;
  while (r < h.rows() && !h.row_is_zero(r)) ++r;
  return r;
}

}  // namespace k3sextic
