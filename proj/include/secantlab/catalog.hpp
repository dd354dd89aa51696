#pragma once

// Variety families, modifiers, and the chart constructors for each.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "secantlab/composition_algebra.hpp"
#include "secantlab/matrix.hpp"
#include "secantlab/multipoly.hpp"
#include "secantlab/param_map.hpp"

namespace secantlab {

struct Veronese {
  std::size_t n;
  std::size_t d;
};
struct Segre {
  std::vector<std::size_t> factors;
};
/// m-planes in P^n.
struct Grassmann {
  std::size_t m;
  std::size_t n;
};
struct Scroll {
  std::vector<std::size_t> degrees;
};
struct Spinor {
  std::size_t k;
};
/// Rank-one hermitian matrices of the given size over a split composition algebra.
struct Hermitian {
  AlgebraKind algebra;
  std::size_t size;
};

using Family = std::variant<Veronese, Segre, Grassmann, Scroll, Spinor, Hermitian>;

/// Cone over the chart with a (c-1)-dimensional vertex spanned by c fresh coordinates.
struct Cone {
  std::size_t c;
};
/// Generic linear projection dropping c ambient dimensions.
struct Project {
  std::size_t c;
};

using Modifier = std::variant<Cone, Project>;

struct VarietySpec {
  Family family;
  std::vector<Modifier> modifiers;
};

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline std::size_t algebra_dim(AlgebraKind a) {
  switch (a) {
    case AlgebraKind::real: return 1;
    case AlgebraKind::split_complex: return 2;
    case AlgebraKind::split_quaternion: return 4;
    case AlgebraKind::split_octonion: return 8;
  }
  return 0;
}

/// Throws std::invalid_argument when a family parameter is out of range.
inline void validate(const VarietySpec& spec) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Veronese>) {
          if (f.n < 1 || f.d < 1) fail("veronese requires n >= 1 and d >= 1");
        } else if constexpr (std::is_same_v<T, Segre>) {
          if (f.factors.size() < 2) fail("segre requires at least two factors");
          if (f.factors.front() == 0) fail("segre factors must be positive");
          if (!std::is_sorted(f.factors.begin(), f.factors.end())) fail("segre factors must be non-decreasing");
        } else if constexpr (std::is_same_v<T, Grassmann>) {
          if (f.m >= f.n) fail("grassmann requires 0 <= m < n");
        } else if constexpr (std::is_same_v<T, Scroll>) {
          if (f.degrees.empty()) fail("scroll requires at least one degree");
          if (!std::is_sorted(f.degrees.begin(), f.degrees.end())) fail("scroll degrees must be non-decreasing");
          if (f.degrees.back() == 0) fail("scroll requires a_n > 0");
        } else if constexpr (std::is_same_v<T, Spinor>) {
          if (f.k < 1) fail("spinor requires k >= 1");
        } else if constexpr (std::is_same_v<T, Hermitian>) {
          if (f.size < 3) fail("hermitian requires size >= 3");
          if (f.algebra == AlgebraKind::split_octonion && f.size != 3) fail("hermitian over splitO requires size 3");
        }
      },
      spec.family);
  for (const auto& m : spec.modifiers)
    std::visit([&](const auto& mod) { if (mod.c == 0) fail("modifier count must be positive"); }, m);
}


/// Dimension and ambient dimension predicted by the family formulas (before modifiers).
struct Dimensions {
  std::size_t n;
  std::size_t r;
};

inline Dimensions family_dimensions(const Family& family) {
  return std::visit(
      [](const auto& f) -> Dimensions {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Veronese>) {
          return {f.n, binomial(f.n + f.d, f.d) - 1};
        } else if constexpr (std::is_same_v<T, Segre>) {
          std::size_t n = 0, prod = 1;
          for (auto m : f.factors) n += m, prod *= m + 1;
          return {n, prod - 1};
        } else if constexpr (std::is_same_v<T, Grassmann>) {
          return {(f.m + 1) * (f.n - f.m), binomial(f.n + 1, f.m + 1) - 1};
        } else if constexpr (std::is_same_v<T, Scroll>) {
          const std::size_t sum = std::accumulate(f.degrees.begin(), f.degrees.end(), std::size_t{0});
          return {f.degrees.size(), sum + f.degrees.size() - 1};
        } else if constexpr (std::is_same_v<T, Spinor>) {
          return {binomial(f.k + 1, 2), (std::size_t{1} << f.k) - 1};
        } else {
          const std::size_t a = algebra_dim(f.algebra);
          return {(f.size - 1) * a, f.size + binomial(f.size, 2) * a - 1};
        }
      },
      family);
}

inline Dimensions expected_dimensions(const VarietySpec& spec) {
  Dimensions d = family_dimensions(spec.family);
  for (const auto& m : spec.modifiers) {
    if (const auto* cone = std::get_if<Cone>(&m)) {
      d.n += cone->c;
      d.r += cone->c;
    } else {
      const auto& proj = std::get<Project>(m);
      if (proj.c + d.n > d.r)
        throw std::invalid_argument("project:" + std::to_string(proj.c) + " would leave an ambient space smaller than P^" +
                                    std::to_string(d.n));
      d.r -= proj.c;
    }
  }
  return d;
}

/// Smoothness the constructions guarantee: smooth families (scrolls with a_1 > 0),
/// no cones, and projections only down to ambient dimension >= 2n + 1.
inline bool assumed_smooth(const VarietySpec& spec) {
  if (const auto* s = std::get_if<Scroll>(&spec.family); s && s->degrees.front() == 0) return false;
  Dimensions d = family_dimensions(spec.family);
  for (const auto& m : spec.modifiers) {
    if (std::holds_alternative<Cone>(m)) return false;
    d.r -= std::get<Project>(m).c;
    if (d.r < 2 * d.n + 1) return false;
  }
  return true;
}

namespace detail {

// Exponent vectors (e_1..e_n) with e_1 + ... + e_n <= d, ordered like the
// homogeneous monomials x_0^(d - |e|) x^e in descending lexicographic order.
inline std::vector<MultiPoly::Exponent> veronese_exponents(std::size_t n, std::size_t d) {
  std::vector<MultiPoly::Exponent> out;
  MultiPoly::Exponent cur(n + 1, 0);
  // enumerate homogeneous exponents in descending lex order
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos == n) {
      cur[n] = static_cast<std::uint32_t>(left);
      out.emplace_back(cur.begin() + 1, cur.end());
      return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
      cur[pos] = static_cast<std::uint32_t>(e);
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

inline ParamMap build_veronese(const Veronese& v) {
  std::vector<MultiPoly> coords;
  for (const auto& e : veronese_exponents(v.n, v.d)) coords.push_back(MultiPoly::monomial(e));
  return {v.n, std::move(coords), "veronese:" + std::to_string(v.n) + "," + std::to_string(v.d)};
}

inline ParamMap build_segre(const Segre& s) {
  std::size_t total = 0;
  for (auto m : s.factors) total += m;
  std::vector<MultiPoly> coords{MultiPoly::constant(total, Rational(1))};
  std::size_t offset = 0;
  for (auto m : s.factors) {
    std::vector<MultiPoly> factor{MultiPoly::constant(total, Rational(1))};
    for (std::size_t i = 0; i < m; ++i) factor.push_back(MultiPoly::variable(total, offset + i));
    std::vector<MultiPoly> next;
    next.reserve(coords.size() * factor.size());
    for (const auto& a : coords)
      for (const auto& b : factor) next.push_back(a * b);
    coords = std::move(next);
    offset += m;
  }
  std::string label = "segre:";
  for (std::size_t i = 0; i < s.factors.size(); ++i) label += (i ? "," : "") + std::to_string(s.factors[i]);
  return {total, std::move(coords), label};
}

inline ParamMap build_grassmann(const Grassmann& g) {
  const std::size_t rows = g.m + 1;
  const std::size_t free = g.n - g.m;
  const std::size_t nv = rows * free;
  Matrix<MultiPoly> frame(rows, g.n + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) frame(i, j) = MultiPoly::constant(nv, Rational(i == j ? 1 : 0));
    for (std::size_t j = 0; j < free; ++j) frame(i, rows + j) = MultiPoly::variable(nv, i * free + j);
  }
  return {nv, maximal_minors(frame), "grassmann:" + std::to_string(g.m) + "," + std::to_string(g.n)};
}

// Parameters (t, x_1, ..., x_{n-1}); coordinates x_i t^j with x_n = 1.
inline ParamMap build_scroll(const Scroll& s) {
  const std::size_t n = s.degrees.size();
  const MultiPoly t = MultiPoly::variable(n, 0);
  std::vector<MultiPoly> coords;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly x = i + 1 < n ? MultiPoly::variable(n, i + 1) : MultiPoly::constant(n, Rational(1));
    for (std::size_t j = 0; j <= s.degrees[i]; ++j) {
      coords.push_back(x);
      x *= t;
    }
  }
  std::string label = "scroll:";
  for (std::size_t i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(s.degrees[i]);
  return {n, std::move(coords), label};
}

// Pfaffians of all even principal submatrices of a generic (k+1) x (k+1)
// skew matrix, by size and then lexicographically; the empty one is 1.
inline ParamMap build_spinor(const Spinor& s) {
  const std::size_t size = s.k + 1;
  const std::size_t nv = binomial(size, 2);
  Matrix<MultiPoly> skew(size, size);
  std::size_t var = 0;
  for (std::size_t i = 0; i < size; ++i) {
    skew(i, i) = MultiPoly(nv);
    for (std::size_t j = i + 1; j < size; ++j) {
      skew(i, j) = MultiPoly::variable(nv, var++);
      skew(j, i) = -skew(i, j);
    }
  }
  std::vector<MultiPoly> coords;
  for (std::size_t sub = 0; sub <= size; sub += 2)
    for (const auto& idx : combinations(size, sub)) {
      Matrix<MultiPoly> principal(sub, sub);
      for (std::size_t a = 0; a < sub; ++a)
        for (std::size_t b = 0; b < sub; ++b) principal(a, b) = skew(idx[a], idx[b]);
      MultiPoly pf = pfaffian(principal);
      coords.push_back(pf.num_vars() == nv ? pf : pf.embed(nv, 0));
    }
  return {nv, std::move(coords), "spinor:" + std::to_string(s.k)};
}

// Upper triangle of v v^* for v = (1, u_1, ..., u_{s-1}): diagonal entries are
// norms, off-diagonal entries contribute every component of v_i conj(v_j).
inline ParamMap build_hermitian(const Hermitian& h) {
  const CompositionAlgebra alg(h.algebra);
  const std::size_t a = alg.dim();
  const std::size_t nv = (h.size - 1) * a;
  std::vector<std::vector<MultiPoly>> v(h.size);
  for (std::size_t c = 0; c < a; ++c) v[0].push_back(MultiPoly::constant(nv, Rational(alg.identity()[c])));
  for (std::size_t i = 1; i < h.size; ++i)
    for (std::size_t c = 0; c < a; ++c) v[i].push_back(MultiPoly::variable(nv, (i - 1) * a + c));

  std::vector<MultiPoly> coords;
  for (std::size_t i = 0; i < h.size; ++i)
    for (std::size_t j = i; j < h.size; ++j) {
      if (i == j) {
        coords.push_back(alg.norm(v[i]));
      } else {
        for (auto& c : alg.multiply(v[i], alg.conjugate(v[j]))) coords.push_back(std::move(c));
      }
    }
  return {nv, std::move(coords), "hermitian:" + alg.name() + "," + std::to_string(h.size)};
}

inline ParamMap apply_cone(const ParamMap& x, std::size_t c) {
  const std::size_t nv = x.n() + c;
  std::vector<MultiPoly> coords;
  for (const auto& p : x.coords()) coords.push_back(p.embed(nv, 0));
  for (std::size_t i = 0; i < c; ++i) coords.push_back(MultiPoly::variable(nv, x.n() + i));
  return {nv, std::move(coords), x.label() + "|cone:" + std::to_string(c)};
}

// Seeded random integer matrix of full row rank.
inline ParamMap apply_projection(const ParamMap& x, std::size_t c, std::uint64_t seed) {
  const std::size_t rows = x.r() + 1 - c;
  std::seed_seq seq{std::uint64_t{0x70726f6aU}, seed, static_cast<std::uint64_t>(x.r()), static_cast<std::uint64_t>(c)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> dist(-999, 999);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Matrix<Rational> l(rows, x.r() + 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j <= x.r(); ++j) l(i, j) = Rational(dist(rng));
    if (rank(l) == rows) {
      return compose_linear(x, l).relabeled(x.label() + "|project:" + std::to_string(c));
    }
  }
  throw std::runtime_error("could not draw a full-rank projection matrix");
}

}  // namespace detail

/// Chart for the spec. Projection matrices are drawn from a generator seeded by
/// the modifier's position, so a spec string always denotes the same chart.
inline ParamMap build(const VarietySpec& spec) {
  validate(spec);
  expected_dimensions(spec);
  ParamMap x = std::visit(
      [](const auto& f) -> ParamMap {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Veronese>) return detail::build_veronese(f);
        else if constexpr (std::is_same_v<T, Segre>) return detail::build_segre(f);
        else if constexpr (std::is_same_v<T, Grassmann>) return detail::build_grassmann(f);
        else if constexpr (std::is_same_v<T, Scroll>) return detail::build_scroll(f);
        else if constexpr (std::is_same_v<T, Spinor>) return detail::build_spinor(f);
        else return detail::build_hermitian(f);
      },
      spec.family);
  std::uint64_t position = 0;
  for (const auto& m : spec.modifiers) {
    if (const auto* cone = std::get_if<Cone>(&m)) {
      x = detail::apply_cone(x, cone->c);
    } else {
      const auto c = std::get<Project>(m).c;
      if (c > x.r()) throw std::invalid_argument("projection removes more than the ambient space");
      x = detail::apply_projection(x, c, position);
    }
    ++position;
  }
  return x;
}

}  // namespace secantlab
