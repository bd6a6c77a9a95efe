#pragma once

/**
 * @file hyperreal.hpp
 * @brief A computable ordered field of hyperreals.
 *
 * A HyperReal is the class of the sequence num(n)/den(n) for two exponential
 * polynomials. Two sequences are identified when they agree eventually, which
 * for this grammar is decidable: a/b == c/d iff a*d - c*b is the zero
 * polynomial. H is the class of the identity sequence <1, 2, 3, ...>.
 *
 * The representation is kept tidy (denominator eventually positive with
 * leading key (1, k) and leading coefficient 1, exact quotients carried out
 * when the denominator divides), but equality never relies on it.
 */

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "hyperdec/error.hpp"
#include "hyperdec/exppoly.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

namespace detail {

/// Exact quotient num/den when den divides num inside the grammar.
///
/// If num = q * den then the smallest key of num is the product of the
/// smallest keys of q and den, so every quotient term has key at least
/// key(trailing num) / key(trailing den); long division stops as soon as the
/// next quotient term would fall below that bound.
inline std::optional<ExpPoly> try_divide_exact(const ExpPoly& num, const ExpPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return ExpPoly{};
  const DominanceKey floor_key = key_of(num.trailing()) / key_of(den.trailing());
  const std::size_t max_steps = 4 * (num.size() + den.size()) + 8;
  std::vector<ExpTerm> quotient;
  ExpPoly rem = num;
  for (std::size_t step = 0; step < max_steps && !rem.is_zero(); ++step) {
    const DominanceKey qkey = key_of(rem.leading()) / key_of(den.leading());
    if (qkey.pow < 0 || compare(qkey, floor_key) < 0) return std::nullopt;
    ExpTerm q{rem.leading().coeff / den.leading().coeff, qkey.base, static_cast<unsigned>(qkey.pow)};
    rem = rem - den * ExpPoly::normalize({q});
    quotient.push_back(std::move(q));
  }
  if (!rem.is_zero()) return std::nullopt;
  return ExpPoly::normalize(std::move(quotient));
}

}  // namespace detail

enum class Ordering { Less, Equal, Greater };

inline std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

class HyperReal {
 public:
  HyperReal() : den_(ExpPoly::constant(1)) {}
  HyperReal(long v) : HyperReal(Rational(v)) {}  // NOLINT: integers promote freely
  explicit HyperReal(const Rational& q) : num_(ExpPoly::constant(q)), den_(ExpPoly::constant(1)) {}
  explicit HyperReal(ExpPoly num) : num_(std::move(num)), den_(ExpPoly::constant(1)) {}

  HyperReal(ExpPoly num, ExpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero hyperreal");
    tidy();
  }

  /// H, the class of <1, 2, 3, ...>.
  static HyperReal infinite_unit() { return HyperReal(ExpPoly::identity()); }

  /// The class of <B^n>.
  static HyperReal geometric(const Rational& base) { return HyperReal(ExpPoly::monomial(1, base, 0)); }

  const ExpPoly& numerator() const noexcept { return num_; }
  const ExpPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool has_unit_denominator() const { return den_ == ExpPoly::constant(1); }

  std::optional<Rational> as_rational() const {
    if (!has_unit_denominator()) return std::nullopt;
    return num_.as_constant();
  }

  /// Value of the representing sequence at index n, absent where the
  /// denominator vanishes.
  std::optional<Rational> eval_at(unsigned long n) const {
    const Rational d = den_.eval_at(n);
    if (d == 0) return std::nullopt;
    return num_.eval_at(n) / d;
  }

  HyperReal operator-() const {
    HyperReal out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend HyperReal operator+(const HyperReal& x, const HyperReal& y) {
    if (x.den_ == y.den_) return HyperReal(x.num_ + y.num_, x.den_);
    return HyperReal(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend HyperReal operator-(const HyperReal& x, const HyperReal& y) { return x + (-y); }
  friend HyperReal operator*(const HyperReal& x, const HyperReal& y) {
    return HyperReal(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend HyperReal operator/(const HyperReal& x, const HyperReal& y) {
    if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero hyperreal");
    return HyperReal(x.num_ * y.den_, x.den_ * y.num_);
  }

  HyperReal& operator+=(const HyperReal& y) { return *this = *this + y; }
  HyperReal& operator-=(const HyperReal& y) { return *this = *this - y; }
  HyperReal& operator*=(const HyperReal& y) { return *this = *this * y; }
  HyperReal& operator/=(const HyperReal& y) { return *this = *this / y; }

  /// Numerator of x - y over the (eventually positive) product denominator;
  /// its eventual sign is the order of x and y.
  friend ExpPoly difference_numerator(const HyperReal& x, const HyperReal& y) {
    if (x.den_ == y.den_) return x.num_ - y.num_;
    return x.num_ * y.den_ - y.num_ * x.den_;
  }

  friend bool operator==(const HyperReal& x, const HyperReal& y) {
    return difference_numerator(x, y).is_zero();
  }

  friend std::strong_ordering operator<=>(const HyperReal& x, const HyperReal& y) {
    const int s = difference_numerator(x, y).eventual_sign().sign;
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (has_unit_denominator()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.size() > 1) n = "(" + n + ")";
    bool bare = false;
    std::string d = den_.size() == 1 ? detail::term_magnitude_text(den_.leading(), "H", &bare) : den_.to_string();
    if (!bare || den_.leading().coeff < 0) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void tidy() {
    if (num_.is_zero()) {
      den_ = ExpPoly::constant(1);
      return;
    }
    // Strip the common monomial lead_base(den)^n * n^k.
    const unsigned kmin = std::min(num_.min_pow(), den_.min_pow());
    const Rational lead_base = den_.leading().base;
    if (kmin > 0 || lead_base != 1) {
      num_ = num_.divided_by_monomial(lead_base, kmin);
      den_ = den_.divided_by_monomial(lead_base, kmin);
    }
    const Rational lead = den_.leading().coeff;
    if (lead != 1) {
      const Rational inv = 1 / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    if (den_.size() > 1 || den_.leading().pow > 0) {
      if (auto q = detail::try_divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = ExpPoly::constant(1);
      }
    }
  }

  ExpPoly num_;
  ExpPoly den_;
};

inline HyperReal H() { return HyperReal::infinite_unit(); }

/// Order of x and y, with the certified index from which the representing
/// sequences are strictly ordered (or equal).
inline SignReport compare_report(const HyperReal& x, const HyperReal& y) {
  return difference_numerator(x, y).eventual_sign();
}

inline Ordering compare(const HyperReal& x, const HyperReal& y) {
  const int s = compare_report(x, y).sign;
  return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
}

inline HyperReal abs(const HyperReal& x) { return x < HyperReal() ? -x : x; }

enum class Magnitude { Infinitesimal, Appreciable, Infinite };

inline std::string_view magnitude_name(Magnitude m) {
  switch (m) {
    case Magnitude::Infinitesimal: return "infinitesimal";
    case Magnitude::Appreciable: return "appreciable";
    case Magnitude::Infinite: return "infinite";
  }
  return "?";
}

struct Classification {
  Magnitude kind = Magnitude::Infinitesimal;
  int sign = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Decided by comparing the dominance keys of numerator and denominator.
inline Classification classify(const HyperReal& x) {
  if (x.is_zero()) return {Magnitude::Infinitesimal, 0};
  const ExpTerm& n = x.numerator().leading();
  const ExpTerm& d = x.denominator().leading();
  const int c = compare(key_of(n), key_of(d));
  const int s = sign(n.coeff) * sign(d.coeff);
  if (c > 0) return {Magnitude::Infinite, s};
  if (c < 0) return {Magnitude::Infinitesimal, s};
  return {Magnitude::Appreciable, s};
}

inline bool is_infinitesimal(const HyperReal& x) { return classify(x).kind == Magnitude::Infinitesimal; }
inline bool is_infinite(const HyperReal& x) { return classify(x).kind == Magnitude::Infinite; }
inline bool is_limited(const HyperReal& x) { return !is_infinite(x); }

/// Standard part: the unique rational infinitely close to a limited x.
inline Rational st(const HyperReal& x) {
  if (x.is_zero()) return 0;
  const ExpTerm& n = x.numerator().leading();
  const ExpTerm& d = x.denominator().leading();
  const int c = compare(key_of(n), key_of(d));
  if (c > 0) throw Error(Errc::NotLimited, "standard part of an infinite hyperreal: " + x.to_string());
  if (c < 0) return 0;
  return n.coeff / d.coeff;
}

inline bool cluster_eq(const HyperReal& x, const HyperReal& y) { return is_infinitesimal(x - y); }
inline bool galaxy_eq(const HyperReal& x, const HyperReal& y) { return !is_infinite(x - y); }

}  // namespace hyperdec
