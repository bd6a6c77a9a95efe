#pragma once

// Exact integer and rational arithmetic on top of GMP's C++ interface.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hyperdec/error.hpp"

namespace hyperdec {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Exact power with a signed exponent; 0^negative raises DivisionByZero.
inline Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw Error(Errc::DivisionByZero, "zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exp);
  }
  const auto e = static_cast<unsigned long>(exp);
  Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  r.canonicalize();
  return r;
}

inline Rational pow10(long exp) { return pow(Rational(10), exp); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool fits_long(const Integer& z) { return z.fits_slong_p(); }

/// Strips every factor 2 and 5 from d, returning the part coprime to 10.
inline Integer coprime_to_ten(Integer d) {
  if (d < 0) d = -d;
  while (d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d;
}

/// Largest of the exponents of 2 and 5 in d: the number of leading
/// non-repeating digits in the decimal expansion of any a/d in lowest terms.
inline unsigned long decimal_preperiod(const Integer& d) {
  unsigned long twos = 0, fives = 0;
  Integer t = d < 0 ? Integer(-d) : d;
  while (t != 0 && mpz_divisible_ui_p(t.get_mpz_t(), 2)) { t /= 2; ++twos; }
  while (t != 0 && mpz_divisible_ui_p(t.get_mpz_t(), 5)) { t /= 5; ++fives; }
  return twos > fives ? twos : fives;
}

/// Length of the repeating block in the decimal expansion of a/d (lowest
/// terms): the multiplicative order of 10 modulo the part of d coprime to 10.
inline unsigned long decimal_period(const Integer& d, unsigned long cap = 1'000'000) {
  const Integer m = coprime_to_ten(d);
  if (m <= 1) return 1;
  Integer x = Integer(10) % m;
  unsigned long k = 1;
  while (x != 1) {
    x = (x * 10) % m;
    if (++k > cap) throw Error(Errc::InvalidArgument, "decimal period exceeds " + std::to_string(cap));
  }
  return k;
}

}  // namespace hyperdec
