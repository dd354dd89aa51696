#pragma once

// Split composition algebras over Q as structure-constant tables:
//   R        the rationals,
//   split-C  Q + Q with the swap involution,
//   split-H  2 x 2 matrices with the adjugate involution,
//   split-O  Zorn vector matrices.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "secantlab/field.hpp"

namespace secantlab {

enum class AlgebraKind { real, split_complex, split_quaternion, split_octonion };

class CompositionAlgebra {
 public:
  explicit CompositionAlgebra(AlgebraKind kind) : kind_(kind) {
    switch (kind) {
      case AlgebraKind::real:
        build(1, {1}, {1}, [](const std::vector<long>& x, const std::vector<long>& y) {
          return std::vector<long>{x[0] * y[0]};
        });
        break;
      case AlgebraKind::split_complex:
        build(2, {1, 1}, {0, 0}, [](const std::vector<long>& x, const std::vector<long>& y) {
          return std::vector<long>{x[0] * y[0], x[1] * y[1]};
        });
        swap_conjugation();
        break;
      case AlgebraKind::split_quaternion:
        // (a b; c d) stored as (a, b, c, d)
        build(4, {1, 0, 0, 1}, {0, 0, 0, 0}, [](const std::vector<long>& x, const std::vector<long>& y) {
          return std::vector<long>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                   x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
        });
        // adjugate: (a b; c d) -> (d -b; -c a)
        conj_ = {0, 0, 0, 1, 0, -1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0};
        break;
      case AlgebraKind::split_octonion:
        // (a, alpha, beta, b) with alpha, beta in Q^3:
        //   (a, al, be, b)(c, ga, de, d) =
        //     (ac + al.de, a ga + d al + be x de, c be + b de - al x ga, bd + be.ga)
        build(8, {1, 0, 0, 0, 0, 0, 0, 1}, {}, [](const std::vector<long>& x, const std::vector<long>& y) {
          const long a = x[0], b = x[7], c = y[0], d = y[7];
          const std::array<long, 3> al{x[1], x[2], x[3]}, be{x[4], x[5], x[6]};
          const std::array<long, 3> ga{y[1], y[2], y[3]}, de{y[4], y[5], y[6]};
          auto dot = [](const auto& u, const auto& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; };
          auto cross = [](const auto& u, const auto& v) {
            return std::array<long, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
          };
          const auto bd = cross(be, de);
          const auto ag = cross(al, ga);
          std::vector<long> z(8);
          z[0] = a * c + dot(al, de);
          for (int i = 0; i < 3; ++i) z[1 + i] = a * ga[i] + d * al[i] + bd[i];
          for (int i = 0; i < 3; ++i) z[4 + i] = c * be[i] + b * de[i] - ag[i];
          z[7] = b * d + dot(be, ga);
          return z;
        });
        // (a, al, be, b) -> (b, -al, -be, a)
        conj_.assign(64, 0);
        conj_[0 * 8 + 7] = 1;
        conj_[7 * 8 + 0] = 1;
        for (int i = 1; i < 7; ++i) conj_[i * 8 + i] = -1;
        break;
    }
  }

  [[nodiscard]] AlgebraKind kind() const { return kind_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<long>& identity() const { return identity_; }

  /// (x y)_k = sum_{i,j} structure(i, j, k) x_i y_j.
  [[nodiscard]] long structure(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  /// conj(x)_i = sum_j conjugation(i, j) x_j.
  [[nodiscard]] long conjugation(std::size_t i, std::size_t j) const { return conj_[i * dim_ + j]; }

  /// Product of coordinate vectors over any commutative ring T.
  template <class T>
  [[nodiscard]] std::vector<T> multiply(const std::vector<T>& x, const std::vector<T>& y) const {
    check(x), check(y);
    std::vector<T> z(dim_, T{});
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(x[i]) || is_zero(y[j])) continue;
        const T xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const long s = structure(i, j, k);
          if (s != 0) z[k] += Rational(s) * xy;
        }
      }
    return z;
  }

  template <class T>
  [[nodiscard]] std::vector<T> conjugate(const std::vector<T>& x) const {
    check(x);
    std::vector<T> z(dim_, T{});
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const long s = conjugation(i, j);
        if (s != 0 && !is_zero(x[j])) z[i] += Rational(s) * x[j];
      }
    return z;
  }

  /// N(x), read off from x conj(x) = N(x) 1.
  template <class T>
  [[nodiscard]] T norm(const std::vector<T>& x) const {
    const auto p = multiply(x, conjugate(x));
    for (std::size_t i = 0; i < dim_; ++i)
      if (identity_[i] != 0) return Rational(1) / identity_[i] * p[i];
    throw std::logic_error("algebra identity is zero");
  }

  [[nodiscard]] std::string name() const {
    switch (kind_) {
      case AlgebraKind::real: return "R";
      case AlgebraKind::split_complex: return "splitC";
      case AlgebraKind::split_quaternion: return "splitH";
      case AlgebraKind::split_octonion: return "splitO";
    }
    return "?";
  }

 private:
  template <class Mul>
  void build(std::size_t dim, std::vector<long> identity, std::vector<long> conj, Mul mul) {
    dim_ = dim;
    identity_ = std::move(identity);
    table_.assign(dim * dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<long> ei(dim, 0), ej(dim, 0);
        ei[i] = 1;
        ej[j] = 1;
        const auto z = mul(ei, ej);
        for (std::size_t k = 0; k < dim; ++k) table_[(i * dim + j) * dim + k] = z[k];
      }
    if (conj.empty() || std::all_of(conj.begin(), conj.end(), [](long v) { return v == 0; })) {
      conj_.assign(dim * dim, 0);
      for (std::size_t i = 0; i < dim; ++i) conj_[i * dim + i] = 1;
    } else {
      conj_ = std::move(conj);
    }
  }

  void swap_conjugation() { conj_ = {0, 1, 1, 0}; }

  template <class T>
  void check(const std::vector<T>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("algebra element has wrong length");
  }

  AlgebraKind kind_;
  std::size_t dim_ = 0;
  std::vector<long> identity_;
  std::vector<long> table_;
  std::vector<long> conj_;
};

}  // namespace secantlab
