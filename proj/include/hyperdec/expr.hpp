#pragma once

/**
 * @file expr.hpp
 * @brief Expression grammar over the hyperreal field.
 *
 *   expr     := term (('+' | '-') term)*
 *   term     := unary (('*' | '/') unary)*
 *   unary    := '-' unary | power
 *   power    := primary ['^' exponent]
 *   primary  := number | 'H' | identifier | '(' expr ')'
 *   exponent := ['-'] (int | 'H' | '(' affine ')')
 *   affine   := ['-'] aterm (('+' | '-') aterm)*
 *   aterm    := int ['*'] 'H' | int | 'H'
 *
 * An exponent is affine in H. When it involves H the base must be a positive
 * rational constant: `10^-H`, `2^(3H+1)`. Otherwise it is an integer power.
 * Identifiers other than H are free variables, used for functions (`x`).
 */

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperdec/error.hpp"
#include "hyperdec/hyperreal.hpp"
#include "hyperdec/polynomial.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

/// alpha*H + beta.
struct Affine {
  long alpha = 0;
  long beta = 0;

  friend bool operator==(const Affine&, const Affine&) = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, InfiniteUnit, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  Rational number;     // Number
  std::string name;    // Variable
  ExprPtr lhs;         // operand / base
  ExprPtr rhs;         // binary right operand
  Affine exponent;     // Pow
  std::size_t offset = 0;

  /// Structural dump, e.g. "Sub(1, Pow(10, -H))".
  std::string to_string() const {
    switch (kind) {
      case Kind::Number: return hyperdec::to_string(number);
      case Kind::InfiniteUnit: return "H";
      case Kind::Variable: return name;
      case Kind::Neg: return "Neg(" + lhs->to_string() + ")";
      case Kind::Add: return "Add(" + lhs->to_string() + ", " + rhs->to_string() + ")";
      case Kind::Sub: return "Sub(" + lhs->to_string() + ", " + rhs->to_string() + ")";
      case Kind::Mul: return "Mul(" + lhs->to_string() + ", " + rhs->to_string() + ")";
      case Kind::Div: return "Div(" + lhs->to_string() + ", " + rhs->to_string() + ")";
      case Kind::Pow: {
        std::string e;
        if (exponent.alpha != 0) {
          e = exponent.alpha == 1 ? "H" : exponent.alpha == -1 ? "-H" : std::to_string(exponent.alpha) + "H";
          if (exponent.beta > 0) e += "+" + std::to_string(exponent.beta);
          if (exponent.beta < 0) e += "-" + std::to_string(-exponent.beta);
        } else {
          e = std::to_string(exponent.beta);
        }
        return "Pow(" + lhs->to_string() + ", " + e + ")";
      }
    }
    return "?";
  }
};

namespace detail {

// Exponent magnitudes beyond this are rejected to keep results evaluable.
inline constexpr long kMaxExponent = 100'000;

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"operator", "end of input"}, "unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
    throw SyntaxError(pos_, std::move(expected), detail);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static std::shared_ptr<Expr> make(Expr::Kind kind, std::size_t offset, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = offset;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      const char c = peek();
      const std::size_t at = pos_;
      if (c == '+' || c == '-') {
        ++pos_;
        lhs = make(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, at, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      const char c = peek();
      const std::size_t at = pos_;
      if (c == '*' || c == '/') {
        ++pos_;
        lhs = make(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, at, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '-') {
      ++pos_;
      return make(Expr::Kind::Neg, at, unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->offset = at;
    e->lhs = std::move(base);
    e->exponent = exponent();
    return e;
  }

  ExprPtr primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (!accept(')')) fail({"')'", "operator"}, "unbalanced parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = make(Expr::Kind::Number, at);
      e->number = number();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id = identifier();
      if (id == "H") return make(Expr::Kind::InfiniteUnit, at);
      auto e = make(Expr::Kind::Variable, at);
      e->name = std::move(id);
      return e;
    }
    fail({"number", "'H'", "identifier", "'('", "'-'"}, c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  /// digits ['.' digits]
  Rational number() {
    const std::string whole = digits();
    Rational value(Integer(whole, 10));
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::string frac = digits();
      if (frac.empty()) fail({"digit"}, "decimal point without digits");
      value += Rational(Integer(frac, 10)) * pow10(-static_cast<long>(frac.size()));
    }
    return value;
  }

  long small_int() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.empty()) fail({"digit"}, "expected an integer");
    if (d.size() > 6 || std::stol(d) > kMaxExponent) {
      pos_ = at;
      fail({}, "exponent too large");
    }
    return std::stol(d);
  }

  Affine exponent() {
    const bool neg = accept('-');
    Affine a;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      a = affine();
      if (!accept(')')) fail({"')'", "'+'", "'-'"}, "exponent must be affine in H");
    } else if (c == 'H') {
      ++pos_;
      a.alpha = 1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      a.beta = small_int();
    } else {
      fail({"integer", "'H'", "'('"}, "bad exponent");
    }
    if (neg) a = {-a.alpha, -a.beta};
    return a;
  }

  Affine affine() {
    Affine sum;
    long sign = accept('-') ? -1 : 1;
    for (;;) {
      const Affine t = affine_term();
      sum.alpha += sign * t.alpha;
      sum.beta += sign * t.beta;
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else return sum;
    }
  }

  Affine affine_term() {
    const char c = peek();
    if (c == 'H') {
      ++pos_;
      return {1, 0};
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) fail({"integer", "'H'"}, "bad affine term");
    const long k = small_int();
    const std::size_t save = pos_;
    const bool star = accept('*');
    if (peek() == 'H') {
      ++pos_;
      return {k, 0};
    }
    if (star) fail({"'H'"}, "expected H after '*'");
    pos_ = save;
    return {0, k};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Field>
Field integer_power(Field base, long e) {
  if (e < 0) return Field(Rational(1)) / integer_power(base, -e);
  Field acc(Rational(1));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

}  // namespace detail

inline ExprPtr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Exact hyperreal value of a closed expression (no free variables).
inline HyperReal elaborate(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return HyperReal(e.number);
    case K::InfiniteUnit: return H();
    case K::Variable: throw Error(Errc::InvalidArgument, "free variable '" + e.name + "' in a closed expression");
    case K::Neg: return -elaborate(*e.lhs);
    case K::Add: return elaborate(*e.lhs) + elaborate(*e.rhs);
    case K::Sub: return elaborate(*e.lhs) - elaborate(*e.rhs);
    case K::Mul: return elaborate(*e.lhs) * elaborate(*e.rhs);
    case K::Div: return elaborate(*e.lhs) / elaborate(*e.rhs);
    case K::Pow: {
      const HyperReal base = elaborate(*e.lhs);
      if (e.exponent.alpha == 0) return detail::integer_power(base, e.exponent.beta);
      const auto b = base.as_rational();
      if (!b || *b <= 0) {
        throw Error(Errc::InvalidArgument, "base of a power in H must be a positive rational, got " + base.to_string());
      }
      // b^(alpha H + beta) = (b^alpha)^H * b^beta
      return HyperReal(ExpPoly::monomial(pow(*b, e.exponent.beta), pow(*b, e.exponent.alpha), 0));
    }
  }
  throw Error(Errc::InvalidArgument, "unknown expression node");
}

inline HyperReal elaborate(std::string_view text) { return elaborate(*parse_expr(text)); }

/// Rational function in the single variable `var`.
inline RationalFunction elaborate_function(const Expr& e, std::string_view var = "x") {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return RationalFunction::constant(e.number);
    case K::InfiniteUnit: throw Error(Errc::InvalidArgument, "H is not allowed in a real function");
    case K::Variable:
      if (e.name != var) throw Error(Errc::InvalidArgument, "unknown variable '" + e.name + "', expected '" + std::string(var) + "'");
      return RationalFunction::variable();
    case K::Neg: return -elaborate_function(*e.lhs, var);
    case K::Add: return elaborate_function(*e.lhs, var) + elaborate_function(*e.rhs, var);
    case K::Sub: return elaborate_function(*e.lhs, var) - elaborate_function(*e.rhs, var);
    case K::Mul: return elaborate_function(*e.lhs, var) * elaborate_function(*e.rhs, var);
    case K::Div: return elaborate_function(*e.lhs, var) / elaborate_function(*e.rhs, var);
    case K::Pow:
      if (e.exponent.alpha != 0) throw Error(Errc::InvalidArgument, "powers in H are not allowed in a real function");
      return detail::integer_power(elaborate_function(*e.lhs, var), e.exponent.beta);
  }
  throw Error(Errc::InvalidArgument, "unknown expression node");
}

inline RationalFunction elaborate_function(std::string_view text, std::string_view var = "x") {
  return elaborate_function(*parse_expr(text), var);
}

inline Polynomial elaborate_polynomial(std::string_view text, std::string_view var = "x") {
  return elaborate_function(text, var).as_polynomial();
}

/// A closed expression that must reduce to an exact rational.
inline Rational elaborate_rational(std::string_view text) {
  const HyperReal v = elaborate(text);
  const auto q = v.as_rational();
  if (!q) throw Error(Errc::InvalidArgument, "expected a rational constant, got " + v.to_string());
  return *q;
}

}  // namespace hyperdec
