#pragma once

// Sparse multivariate polynomials with rational coefficients.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secantlab/field.hpp"

namespace secantlab {

class MultiPoly {
 public:
  using Exponent = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponent, Rational>;

  /// Zero polynomial in zero variables; it adapts to any variable count in
  /// arithmetic, as does every constant with num_vars() == 0.
  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}
  MultiPoly(long c) { add_term(Exponent{}, Rational(c)); }  // NOLINT(google-explicit-constructor)

  static MultiPoly constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t num_vars, std::size_t i) {
    if (i >= num_vars) throw std::out_of_range("variable index out of range");
    MultiPoly p(num_vars);
    Exponent e(num_vars, 0);
    e[i] = 1;
    p.add_term(e, Rational(1));
    return p;
  }
  static MultiPoly monomial(const Exponent& e, const Rational& c = Rational(1)) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
      std::uint32_t s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != num_vars_) throw std::invalid_argument("exponent length differs from variable count");
    if (secantlab::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (secantlab::is_zero(it->second)) terms_.erase(it);
    }
  }

  [[nodiscard]] MultiPoly derivative(std::size_t var) const {
    if (var >= num_vars_) throw std::out_of_range("derivative variable out of range");
    MultiPoly d(num_vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      d.add_term(f, c * e[var]);
    }
    return d;
  }

  /// Re-expresses the polynomial in `total` variables, shifting variable i to i + offset.
  [[nodiscard]] MultiPoly embed(std::size_t total, std::size_t offset) const {
    if (offset + num_vars_ > total) throw std::invalid_argument("embedding does not fit");
    MultiPoly p(total);
    for (const auto& [e, c] : terms_) {
      Exponent f(total, 0);
      std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
      p.add_term(f, c);
    }
    return p;
  }

  template <ExactField F>
  [[nodiscard]] F evaluate(std::span<const F> point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("evaluation point has wrong length");
    F acc{};
    for (const auto& [e, c] : terms_) {
      F term = from_rational<F>(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
      acc += term;
    }
    return acc;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    const std::size_t nv = common_vars(a, b);
    MultiPoly out = a.promoted(nv);
    for (const auto& [e, c] : b.promoted(nv).terms_) out.add_term(e, c);
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  MultiPoly operator-() const {
    MultiPoly out(num_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const std::size_t nv = common_vars(a, b);
    const MultiPoly pa = a.promoted(nv);
    const MultiPoly pb = b.promoted(nv);
    MultiPoly out(nv);
    for (const auto& [ea, ca] : pa.terms_)
      for (const auto& [eb, cb] : pb.terms_) {
        Exponent e(nv);
        for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly out(p.num_vars_);
    if (secantlab::is_zero(s)) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const std::size_t nv = common_vars(a, b);
    return a.promoted(nv).terms_ == b.promoted(nv).terms_;
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      const Rational mag = abs(c);
      bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
      if (mag != 1 || constant) os << mag.get_str();
      bool need_star = mag != 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        os << "x" << i;
        if (e[i] > 1) os << "^" << e[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  static std::size_t common_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ == b.num_vars_) return a.num_vars_;
    if (a.num_vars_ == 0) return b.num_vars_;
    if (b.num_vars_ == 0) return a.num_vars_;
    throw std::invalid_argument("polynomials live in different variable counts");
  }

  [[nodiscard]] MultiPoly promoted(std::size_t nv) const {
    if (nv == num_vars_) return *this;
    MultiPoly out(nv);
    for (const auto& [e, c] : terms_) out.add_term(Exponent(nv, 0), c);
    return out;
  }

  std::size_t num_vars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace secantlab
