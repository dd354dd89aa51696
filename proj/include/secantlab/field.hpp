#pragma once

// Exact scalar types: arbitrary-precision rationals (GMP) and prime fields
// with moduli just below 2^61.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace secantlab {

using Rational = mpq_class;

/// Residue class modulo a prime P < 2^62. Products go through 128-bit
/// intermediates, so no multiprecision is involved.
template <std::uint64_t P>
class ModP {
  static_assert(P > 2 && P < (std::uint64_t{1} << 62), "modulus out of range");

 public:
  static constexpr std::uint64_t modulus = P;

  constexpr ModP() = default;
  constexpr explicit ModP(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(P);
    if (r < 0) r += static_cast<std::int64_t>(P);
    value_ = static_cast<std::uint64_t>(r);
  }

  static constexpr ModP from_residue(std::uint64_t v) {
    ModP out;
    out.value_ = v % P;
    return out;
  }

  [[nodiscard]] constexpr std::uint64_t value() const { return value_; }
  [[nodiscard]] constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.value_ + b.value_;
    if (s >= P) s -= P;
    return from_residue(s);
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return from_residue(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + P - b.value_);
  }
  friend constexpr ModP operator*(ModP a, ModP b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a.value_) * b.value_;
    return from_residue(static_cast<std::uint64_t>(p % P));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  constexpr ModP operator-() const { return from_residue(value_ == 0 ? 0 : P - value_); }

  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }

  friend constexpr bool operator==(ModP a, ModP b) { return a.value_ == b.value_; }

  [[nodiscard]] constexpr ModP pow(std::uint64_t e) const {
    ModP base = *this;
    ModP acc = from_residue(1);
    while (e != 0) {
      if (e & 1U) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  [[nodiscard]] ModP inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in prime field");
    return pow(P - 2);
  }

 private:
  std::uint64_t value_ = 0;
};

// Three primes just below 2^61; the first is the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kPrime0 = 2305843009213693951ULL;
inline constexpr std::uint64_t kPrime1 = 2305843009213693921ULL;
inline constexpr std::uint64_t kPrime2 = 2305843009213693907ULL;

using Fp0 = ModP<kPrime0>;
using Fp1 = ModP<kPrime1>;
using Fp2 = ModP<kPrime2>;

template <class T>
struct is_prime_field : std::false_type {};
template <std::uint64_t P>
struct is_prime_field<ModP<P>> : std::true_type {};

template <class F>
concept ExactField = std::same_as<F, Rational> || is_prime_field<F>::value;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
template <std::uint64_t P>
constexpr bool is_zero(ModP<P> x) {
  return x.is_zero();
}

/// Image of a rational number in F. Throws if the denominator vanishes mod p.
template <ExactField F>
F from_rational(const Rational& q) {
  if constexpr (std::same_as<F, Rational>) {
    return q;
  } else {
    static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
    const auto num = mpz_fdiv_ui(q.get_num_mpz_t(), F::modulus);
    const auto den = mpz_fdiv_ui(q.get_den_mpz_t(), F::modulus);
    if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
    return F::from_residue(num) / F::from_residue(den);
  }
}

template <ExactField F>
F from_int(std::int64_t v) {
  if constexpr (std::same_as<F, Rational>) {
    return Rational(static_cast<long>(v));
  } else {
    return F(v);
  }
}

/// Random generic value: integers in [-999, 999] over Q, uniform residues mod p.
template <ExactField F>
F random_scalar(std::mt19937_64& rng) {
  if constexpr (std::same_as<F, Rational>) {
    std::uniform_int_distribution<long> dist(-999, 999);
    return Rational(dist(rng));
  } else {
    std::uniform_int_distribution<std::uint64_t> dist(0, F::modulus - 1);
    return F::from_residue(dist(rng));
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
template <std::uint64_t P>
std::string to_string(ModP<P> x) {
  return std::to_string(x.value());
}

/// Short tag used in reports: "rational" or "prime:<p>".
template <ExactField F>
std::string mode_name() {
  if constexpr (std::same_as<F, Rational>) {
    return "rational";
  } else {
    return "prime:" + std::to_string(F::modulus);
  }
}

}  // namespace secantlab
