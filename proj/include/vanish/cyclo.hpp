#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vanish {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(std::size_t n);

/// An element of Q(zeta_e) in the power basis {zeta_e^i : 0 <= i < phi(e)},
/// kept fully reduced modulo the e-th cyclotomic polynomial. Values with
/// different conductors are lifted to the lcm before combining.
class Cyc {
 public:
  Cyc();  // zero, conductor 1
  Cyc(long long n);  // NOLINT: integers embed implicitly
  Cyc(const Rational& q);  // NOLINT

  /// Reduces sum coeffs[k] zeta_e^k (any length; exponents taken mod e).
  static Cyc from_powers(std::size_t e, const std::vector<Rational>& coeffs);

  std::size_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;

  /// The same value in Q(zeta_m); requires conductor() | m.
  Cyc lifted(std::size_t m) const;
  /// The same value at the smallest conductor containing it.
  Cyc reduced() const;

  /// Image under zeta -> zeta^k, gcd(k, conductor) = 1.
  Cyc galois(long long k) const;
  /// Complex conjugation zeta -> zeta^-1.
  Cyc conj() const { return galois(-1); }

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& b);
  Cyc& operator-=(const Cyc& b);
  Cyc& operator*=(const Cyc& b);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  Cyc scaled(const Rational& q) const;

  friend bool operator==(const Cyc& a, const Cyc& b);
  /// Total order: both lifted to the lcm conductor, then coefficients
  /// compared lexicographically.
  friend std::strong_ordering compare(const Cyc& a, const Cyc& b);

  /// "a0 + a1*z(e)^1 + ..." with zero terms suppressed, at the stored
  /// conductor.
  std::string to_string() const;

 private:
  std::size_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

Cyc root_of_unity(std::size_t e, long long k);
Cyc add(const Cyc& a, const Cyc& b);
Cyc mul(const Cyc& a, const Cyc& b);
Cyc neg(const Cyc& a);
Cyc conj(const Cyc& a);
bool is_zero(const Cyc& a);
std::optional<Integer> is_rational_integer(const Cyc& a);

}  // namespace vanish
