#pragma once

// Polynomial parametrizations of affine charts of projective varieties, and
// their field-specialized compiled form used by the measurement engine.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secantlab/field.hpp"
#include "secantlab/matrix.hpp"
#include "secantlab/multipoly.hpp"

namespace secantlab {

/// A chart t -> [phi_0(t) : ... : phi_r(t)] with n parameters.
class ParamMap {
 public:
  ParamMap(std::size_t n, std::vector<MultiPoly> coords, std::string label)
      : n_(n), label_(std::move(label)) {
    if (coords.empty()) throw std::invalid_argument("parametrization needs at least one coordinate");
    coords_.reserve(coords.size());
    for (auto& c : coords) {
      if (c.num_vars() != n && c.num_vars() != 0)
        throw std::invalid_argument("coordinate polynomial has wrong variable count");
      coords_.push_back(c.num_vars() == n ? std::move(c) : c.embed(n, 0));
    }
    jacobian_.reserve(coords_.size() * n_);
    for (const auto& c : coords_)
      for (std::size_t j = 0; j < n_; ++j) jacobian_.push_back(c.derivative(j));
  }

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t r() const { return coords_.size() - 1; }
  [[nodiscard]] const std::vector<MultiPoly>& coords() const { return coords_; }
  [[nodiscard]] const std::string& label() const { return label_; }

  [[nodiscard]] ParamMap relabeled(std::string label) const {
    ParamMap out = *this;
    out.label_ = std::move(label);
    return out;
  }

  /// d coords[c] / d t_j.
  [[nodiscard]] const MultiPoly& partial(std::size_t c, std::size_t j) const { return jacobian_[c * n_ + j]; }

  template <ExactField F>
  [[nodiscard]] std::vector<F> evaluate(std::span<const F> t) const {
    if (t.size() != n_) throw std::invalid_argument("evaluate: expected " + std::to_string(n_) + " parameters");
    std::vector<F> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c.template evaluate<F>(t));
    return out;
  }

  /// Rows phi(t), d phi/d t_1 (t), ..., d phi/d t_n (t), from the symbolic Jacobian.
  template <ExactField F>
  [[nodiscard]] Matrix<F> tangent_matrix(std::span<const F> t) const {
    const auto point = evaluate<F>(t);
    Matrix<F> m(n_ + 1, coords_.size());
    for (std::size_t c = 0; c < coords_.size(); ++c) {
      m(0, c) = point[c];
      for (std::size_t j = 0; j < n_; ++j) m(j + 1, c) = partial(c, j).template evaluate<F>(t);
    }
    return m;
  }

 private:
  std::size_t n_;
  std::vector<MultiPoly> coords_;
  std::vector<MultiPoly> jacobian_;
  std::string label_;
};

/// Linear recombination of coordinates: the chart of L(X) for an (r'+1) x (r+1) matrix L.
inline ParamMap compose_linear(const ParamMap& x, const Matrix<Rational>& l) {
  if (l.cols() != x.r() + 1) throw std::invalid_argument("compose_linear: matrix has wrong column count");
  std::vector<MultiPoly> coords;
  coords.reserve(l.rows());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    MultiPoly acc(x.n());
    for (std::size_t j = 0; j < l.cols(); ++j)
      if (!is_zero(l(i, j))) acc += l(i, j) * x.coords()[j];
    coords.push_back(std::move(acc));
  }
  return {x.n(), std::move(coords), x.label() + "|linear"};
}

/// Chart of the join of the given charts: parameters are the concatenated
/// chart parameters followed by mixing weights l_1..l_k, and the map is
/// phi_0(t_0) + sum_i l_i phi_i(t_i). k + 1 copies of X parametrize S^k(X).
inline ParamMap join_map(std::span<const ParamMap> xs) {
  if (xs.empty()) throw std::invalid_argument("join_map: empty list");
  if (xs.size() == 1) return xs.front();
  const std::size_t r = xs.front().r();
  std::size_t total = xs.size() - 1;
  for (const auto& x : xs) {
    if (x.r() != r) throw std::invalid_argument("join_map: ambient dimensions differ");
    total += x.n();
  }
  std::vector<MultiPoly> coords(r + 1, MultiPoly(total));
  std::size_t offset = 0;
  const std::size_t weights = total - (xs.size() - 1);
  std::string label = "join(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const MultiPoly weight = i == 0 ? MultiPoly::constant(total, Rational(1))
                                    : MultiPoly::variable(total, weights + i - 1);
    for (std::size_t c = 0; c <= r; ++c) coords[c] += weight * xs[i].coords()[c].embed(total, offset);
    offset += xs[i].n();
    label += (i ? "," : "") + xs[i].label();
  }
  return {total, std::move(coords), label + ")"};
}

inline ParamMap join_map(const ParamMap& x, std::size_t copies) {
  const std::vector<ParamMap> xs(copies, x);
  return join_map(std::span<const ParamMap>(xs));
}

/// A parametrization with coefficients in a fixed field, stored as sparse
/// term lists so that values, gradients and Hessians come out of one pass.
template <ExactField F>
class FieldChart {
 public:
  struct Term {
    F coef;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> powers;  // (variable, exponent > 0)
  };
  using Coordinate = std::vector<Term>;

  FieldChart(std::size_t n, std::vector<Coordinate> coords, std::string label)
      : n_(n), coords_(std::move(coords)), label_(std::move(label)) {
    if (coords_.empty()) throw std::invalid_argument("chart needs at least one coordinate");
    max_degree_.assign(n_, 0);
    for (const auto& c : coords_)
      for (const auto& t : c)
        for (auto [v, e] : t.powers) max_degree_[v] = std::max(max_degree_[v], e);
  }

  explicit FieldChart(const ParamMap& x) : FieldChart(x.n(), compile(x), x.label()) {}

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t r() const { return coords_.size() - 1; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] const std::vector<Coordinate>& coords() const { return coords_; }

  [[nodiscard]] std::vector<F> point(std::span<const F> t) const {
    const auto pw = powers(t);
    std::vector<F> out(coords_.size());
    for (std::size_t c = 0; c < coords_.size(); ++c)
      for (const auto& term : coords_[c]) {
        F v = term.coef;
        for (auto [var, e] : term.powers) v *= pw[var][e];
        out[c] += v;
      }
    return out;
  }

  /// (n+1) x (r+1) tangent frame: the point followed by the n partial derivatives.
  [[nodiscard]] Matrix<F> frame(std::span<const F> t) const {
    check_arity(t);
    const auto pw = powers(t);
    Matrix<F> m(n_ + 1, coords_.size());
    for (std::size_t c = 0; c < coords_.size(); ++c)
      for (const auto& term : coords_[c]) {
        m(0, c) += monomial(term, pw, npos, npos);
        for (auto [var, e] : term.powers) m(var + 1, c) += monomial(term, pw, var, npos);
      }
    return m;
  }

  /// For each coordinate c the symmetric n x n Hessian, flattened as c*n*n + i*n + j.
  [[nodiscard]] std::vector<F> hessians(std::span<const F> t) const {
    check_arity(t);
    const auto pw = powers(t);
    std::vector<F> h(coords_.size() * n_ * n_);
    for (std::size_t c = 0; c < coords_.size(); ++c)
      for (const auto& term : coords_[c])
        for (auto [vi, ei] : term.powers)
          for (auto [vj, ej] : term.powers) {
            if (vj < vi) continue;
            if (vi == vj && ei < 2) continue;
            const F v = monomial(term, pw, vi, vj);
            h[c * n_ * n_ + vi * n_ + vj] += v;
            if (vi != vj) h[c * n_ * n_ + vj * n_ + vi] += v;
          }
    return h;
  }

  /// Coordinates recombined by an (r'+1) x (r+1) matrix.
  [[nodiscard]] FieldChart compose(const Matrix<F>& l) const {
    if (l.cols() != coords_.size()) throw std::invalid_argument("compose: matrix has wrong column count");
    std::vector<Coordinate> out(l.rows());
    for (std::size_t i = 0; i < l.rows(); ++i) {
      std::map<std::vector<std::pair<std::uint32_t, std::uint32_t>>, F> acc;
      for (std::size_t j = 0; j < l.cols(); ++j) {
        if (is_zero(l(i, j))) continue;
        for (const auto& term : coords_[j]) acc[term.powers] += l(i, j) * term.coef;
      }
      for (auto& [pw, coef] : acc)
        if (!is_zero(coef)) out[i].push_back(Term{coef, pw});
    }
    return FieldChart(n_, std::move(out), label_ + "|projected");
  }

 private:
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  static std::vector<Coordinate> compile(const ParamMap& x) {
    std::vector<Coordinate> out(x.coords().size());
    for (std::size_t c = 0; c < x.coords().size(); ++c)
      for (const auto& [e, coef] : x.coords()[c].terms()) {
        Term t{from_rational<F>(coef), {}};
        for (std::size_t v = 0; v < e.size(); ++v)
          if (e[v] != 0) t.powers.emplace_back(static_cast<std::uint32_t>(v), e[v]);
        out[c].push_back(std::move(t));
      }
    return out;
  }

  void check_arity(std::span<const F> t) const {
    if (t.size() != n_) throw std::invalid_argument("chart expects " + std::to_string(n_) + " parameters");
  }

  [[nodiscard]] std::vector<std::vector<F>> powers(std::span<const F> t) const {
    check_arity(t);
    std::vector<std::vector<F>> pw(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      pw[v].resize(max_degree_[v] + 1);
      pw[v][0] = F(1);
      for (std::uint32_t e = 1; e <= max_degree_[v]; ++e) pw[v][e] = pw[v][e - 1] * t[v];
    }
    return pw;
  }

  // Value of the term after differentiating once by d1 and once by d2 (npos = skip).
  static F monomial(const Term& term, const std::vector<std::vector<F>>& pw, std::uint32_t d1, std::uint32_t d2) {
    F v = term.coef;
    for (auto [var, e] : term.powers) {
      std::uint32_t exp = e;
      for (std::uint32_t d : {d1, d2}) {
        if (d != var) continue;
        if (exp == 0) return F{};
        v *= from_int<F>(exp);
        --exp;
      }
      v *= pw[var][exp];
    }
    return v;
  }

  std::size_t n_;
  std::vector<Coordinate> coords_;
  std::vector<std::uint32_t> max_degree_;
  std::string label_;
};

}  // namespace secantlab
