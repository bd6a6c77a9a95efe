#pragma once

// Dense univariate polynomials and rational functions over exact rationals.
// Evaluation is generic so the same f applies to rationals and hyperreals.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperdec/error.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }
  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> cs(k + 1, Rational(0));
    cs[k] = c;
    return Polynomial(std::move(cs));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const& noexcept { return c_; }
  std::vector<Rational> coeffs() && { return std::move(c_); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  bool is_constant() const { return c_.size() <= 1; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
  }
  Polynomial operator-() const { return scaled(-1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& c : r) c *= s;
    return Polynomial(std::move(r));
  }

  Polynomial power(unsigned long e) const {
    Polynomial out = constant(1);
    for (unsigned long i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(r));
  }

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    std::vector<Rational> r(c_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / static_cast<unsigned long>(i + 1);
    return Polynomial(std::move(r));
  }

  /// Coefficients of p(a + t) as a polynomial in t.
  Polynomial shifted(const Rational& a) const {
    Polynomial out;
    const Polynomial lin({a, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + constant(*it);
    return out;
  }

  /// Horner evaluation in any field constructible from a Rational.
  template <class Field>
  Field operator()(const Field& x) const {
    Field acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      acc = acc + Field(*it);
    }
    return acc;
  }

  std::string to_string(std::string_view var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& c = c_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      const Rational mag = abs(c);
      if (i == 0 || mag != 1) out += hyperdec::to_string(mag) + (i ? "*" : "");
      if (i >= 1) out += std::string(var);
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    for (auto& c : c_) c.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// num/den with den not identically zero. No cancellation is performed, so
/// (x^2 - 1)/(x - 1) keeps its pole at 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  explicit RationalFunction(const Rational& c) : RationalFunction(Polynomial::constant(c)) {}
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  }

  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_polynomial() const { return den_.is_constant(); }
  Polynomial as_polynomial() const {
    if (!is_polynomial()) throw Error(Errc::InvalidArgument, "not a polynomial: " + to_string());
    return num_.scaled(1 / den_.coeff(0));
  }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    if (f.den_ == g.den_) return {f.num_ + g.num_, f.den_};
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
  }
  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.num_, f.den_ * g.den_};
  }
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.num_.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero function");
    return {f.num_ * g.den_, f.den_ * g.num_};
  }

  /// Quotient rule.
  RationalFunction derivative() const {
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }

  bool has_pole_at(const Rational& q) const { return den_(q) == 0; }

  std::string to_string(std::string_view var = "x") const {
    if (den_ == Polynomial::constant(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace hyperdec
