#pragma once

// Dense exact matrices and the elimination kernel: rank, annihilators,
// determinants, Pfaffians and maximal minors.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secantlab/field.hpp"

namespace secantlab {

/// Row-major dense matrix with fixed shape. T only needs ring operations for
/// the expansion-based routines (pfaffian, maximal_minors), so polynomial
/// matrices work there too.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  [[nodiscard]] const std::vector<T>& data() const& { return data_; }
  [[nodiscard]] std::vector<T> data() && { return std::move(data_); }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

/// Vertical concatenation; all blocks must share a column count.
template <class T>
Matrix<T> vstack(std::span<const Matrix<T>> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::vector<T> data;
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    data.insert(data.end(), b.data().begin(), b.data().end());
    rows += b.rows();
  }
  return Matrix<T>(rows, cols, std::move(data));
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  const std::vector<Matrix<T>> blocks{a, b};
  return vstack<T>(std::span<const Matrix<T>>(blocks));
}

namespace detail {

// Rows of a rational matrix scaled to primitive-free integer rows.
inline std::vector<std::vector<mpz_class>> integer_rows(const Matrix<Rational>& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const auto& q : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      out[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

// Fraction-free (Bareiss) echelon reduction of an integer matrix; returns the rank.
// Each division by the previous pivot is exact.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t pivot_row = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    const mpz_class& piv = a[pivot_row][c];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      const mpz_class lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = piv * a[i][j] - lead * a[pivot_row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++pivot_row;
  }
  return pivot_row;
}

// Gauss-Jordan reduction in place; returns pivot columns.
template <ExactField F>
std::vector<std::size_t> reduce_rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < m.rows() && is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pr, j));
    const F inv = F(1) / m(pr, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(pr, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank. Over Q this clears denominators row by row and runs Bareiss
/// elimination on integers; over F_p it is plain Gaussian elimination.
template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  if constexpr (std::same_as<F, Rational>) {
    return detail::bareiss_rank(detail::integer_rows(m), m.cols());
  } else {
    Matrix<F> a = m;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
      std::size_t sel = pr;
      while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
      if (sel == a.rows()) continue;
      if (sel != pr)
        for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(sel, j), a(pr, j));
      const F inv = a(pr, c).inverse();
      for (std::size_t i = pr + 1; i < a.rows(); ++i) {
        if (a(i, c).is_zero()) continue;
        const F factor = a(i, c) * inv;
        for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) -= factor * a(pr, j);
        a(i, c) = F{};
      }
      ++pr;
    }
    return pr;
  }
}

/// Basis (as rows) of the vectors orthogonal to every row of m, i.e. the right
/// kernel of m. Over Q each basis row is scaled to coprime integers.
template <ExactField F>
Matrix<F> annihilator(const Matrix<F>& m) {
  Matrix<F> a = m;
  const auto pivots = detail::reduce_rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix<F> out(free_cols.size(), m.cols());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    out(b, fc) = F(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) out(b, pivots[p]) = -a(p, fc);
  }
  if constexpr (std::same_as<F, Rational>) {
    const auto ints = detail::integer_rows(out);
    for (std::size_t i = 0; i < out.rows(); ++i) {
      mpz_class g = 0;
      for (const auto& v : ints[i]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = Rational(ints[i][j] / g);
    }
  }
  return out;
}

/// Determinant by elimination over a field.
template <ExactField F>
F determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix<F> a = m;
  F det(1);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && is_zero(a(sel, c))) ++sel;
    if (sel == n) return F{};
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const F inv = F(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const F factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

namespace detail {

template <class T>
T pfaffian_of(const Matrix<T>& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return T(1L);
  const std::size_t first = idx.front();
  T acc{};
  bool positive = true;
  for (std::size_t pos = 1; pos < idx.size(); ++pos) {
    const std::size_t j = idx[pos];
    const T& entry = m(first, j);
    if (!is_zero(entry)) {
      std::vector<std::size_t> rest;
      rest.reserve(idx.size() - 2);
      for (std::size_t q = 1; q < idx.size(); ++q)
        if (q != pos) rest.push_back(idx[q]);
      T term = entry * pfaffian_of(m, rest);
      if (positive) acc += term;
      else acc -= term;
    }
    positive = !positive;
  }
  return acc;
}

template <class T>
T cofactor_det(const Matrix<T>& m, std::span<const std::size_t> row_ids, std::vector<std::size_t>& col_ids) {
  if (row_ids.empty()) return T(1L);
  if (row_ids.size() == 1) return m(row_ids[0], col_ids[0]);
  T acc{};
  bool positive = true;
  for (std::size_t pos = 0; pos < col_ids.size(); ++pos) {
    const T& entry = m(row_ids[0], col_ids[pos]);
    if (!is_zero(entry)) {
      std::vector<std::size_t> rest;
      rest.reserve(col_ids.size() - 1);
      for (std::size_t q = 0; q < col_ids.size(); ++q)
        if (q != pos) rest.push_back(col_ids[q]);
      T term = entry * cofactor_det(m, row_ids.subspan(1), rest);
      if (positive) acc += term;
      else acc -= term;
    }
    positive = !positive;
  }
  return acc;
}

}  // namespace detail

/// Pfaffian of an even-sized skew-symmetric matrix, expanding along the first row.
template <class T>
T pfaffian(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: matrix is not square");
  if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd-sized matrix");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!is_zero(m(i, i))) throw std::invalid_argument("pfaffian: nonzero diagonal entry");
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == -m(j, i))) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
  }
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return detail::pfaffian_of(m, idx);
}

/// Determinant of the square submatrix on the given rows and columns, by
/// cofactor expansion (ring-generic, intended for small sizes).
template <class T>
T minor_det(const Matrix<T>& m, std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) {
  if (row_ids.size() != col_ids.size()) throw std::invalid_argument("minor must be square");
  std::vector<std::size_t> cols(col_ids.begin(), col_ids.end());
  return detail::cofactor_det(m, row_ids, cols);
}

/// Lexicographic enumeration of the k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// All rows(m)-sized minors, column subsets in lexicographic order.
template <class T>
std::vector<T> maximal_minors(const Matrix<T>& m) {
  if (m.rows() > m.cols()) throw std::invalid_argument("maximal_minors: more rows than columns");
  std::vector<std::size_t> rows(m.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<T> out;
  for (const auto& cols : combinations(m.cols(), m.rows())) out.push_back(minor_det<T>(m, rows, cols));
  return out;
}

}  // namespace secantlab
