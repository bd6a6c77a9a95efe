#pragma once

// Repeating-decimal symbols such as "0.(9)" or "-3.12(45)", evaluated two
// ways: as the limit of their truncations (an exact rational) and as the
// class of the truncation sequence itself (a hyperreal).

#include <cctype>
#include <string>
#include <string_view>

#include "hyperdec/error.hpp"
#include "hyperdec/exppoly.hpp"
#include "hyperdec/hyperreal.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

struct DecimalSymbol {
  int sign = 1;
  Integer int_part = 0;
  std::string preperiod;  // digits after the point, before the repeat
  std::string period;     // repeating block as written; empty = terminating

  friend bool operator==(const DecimalSymbol&, const DecimalSymbol&) = default;

  std::string to_string() const {
    std::string out = sign < 0 ? "-" : "";
    out += hyperdec::to_string(int_part);
    if (!preperiod.empty() || !period.empty()) out += "." + preperiod;
    if (!period.empty()) out += "(" + period + ")";
    return out;
  }
};

/// symbol := ['-'] digits ['.' [digits] ['(' digits ')']]
/// The part after the point must hold at least one digit or a period.
inline DecimalSymbol parse_symbol(std::string_view text) {
  std::size_t pos = 0;
  auto at_digit = [&] { return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); };
  auto digits = [&] {
    const std::size_t start = pos;
    while (at_digit()) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  DecimalSymbol sym;
  if (pos < text.size() && text[pos] == '-') {
    sym.sign = -1;
    ++pos;
  }
  const std::string int_digits = digits();
  if (int_digits.empty()) throw SyntaxError(pos, {"digit"}, "missing integer part");
  sym.int_part = Integer(int_digits, 10);
  if (pos == text.size()) return sym;
  if (text[pos] != '.') throw SyntaxError(pos, {"digit", "'.'", "end of input"}, "unexpected character");
  ++pos;
  sym.preperiod = digits();
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    sym.period = digits();
    if (sym.period.empty()) throw SyntaxError(pos, {"digit"}, "empty period");
    if (pos >= text.size() || text[pos] != ')') throw SyntaxError(pos, {"digit", "')'"}, "unclosed period");
    ++pos;
  }
  if (sym.preperiod.empty() && sym.period.empty()) throw SyntaxError(pos, {"digit", "'('"}, "no digits after the point");
  if (pos != text.size()) throw SyntaxError(pos, {"end of input"}, "trailing characters");
  return sym;
}

namespace detail {

inline Integer digits_value(const std::string& d) { return d.empty() ? Integer(0) : Integer(d, 10); }

/// Unsigned unital value split as int + P/10^a + Q/(10^a (10^p - 1)).
inline Rational unsigned_unital(const DecimalSymbol& s) {
  const long a = static_cast<long>(s.preperiod.size());
  const long p = static_cast<long>(s.period.size());
  Rational v = Rational(s.int_part) + Rational(digits_value(s.preperiod)) * pow10(-a);
  if (p > 0) {
    const Integer rep = pow(Integer(10), static_cast<unsigned long>(p)) - 1;
    v += Rational(digits_value(s.period)) / Rational(rep) * pow10(-a);
  }
  return v;
}

}  // namespace detail

/// The limit of the truncations.
inline Rational unital_value(const DecimalSymbol& s) {
  return s.sign * detail::unsigned_unital(s);
}

/// Class of the truncations after a + p*m fractional digits, m = 1, 2, ...:
/// u_m = L - c * 10^-a * (10^-p)^m with c = Q / (10^p - 1).
inline HyperReal natural_string_value(const DecimalSymbol& s) {
  const Rational limit = detail::unsigned_unital(s);
  const long a = static_cast<long>(s.preperiod.size());
  const long p = static_cast<long>(s.period.size());
  ExpPoly gen = ExpPoly::constant(limit);
  if (p > 0) {
    const Integer rep = pow(Integer(10), static_cast<unsigned long>(p)) - 1;
    const Rational c = Rational(detail::digits_value(s.period)) / Rational(rep);
    gen = gen - ExpPoly::monomial(c * pow10(-a), pow10(-p), 0);
  }
  return HyperReal(gen.scaled(Rational(s.sign)));
}

/// unital - natural: zero for terminating symbols, a positive infinitesimal
/// otherwise (negated for negative symbols).
inline HyperReal gap_from_unital(const DecimalSymbol& s) {
  return HyperReal(unital_value(s)) - natural_string_value(s);
}

/// Exact value of the written digits truncated after `frac_digits`
/// fractional places (the repeat block unrolled as needed).
inline Rational truncate_symbol(const DecimalSymbol& s, std::size_t frac_digits) {
  std::string digits = s.preperiod;
  if (!s.period.empty()) {
    while (digits.size() < frac_digits) digits += s.period;
  }
  if (digits.size() > frac_digits) digits.resize(frac_digits);
  const Rational v = Rational(s.int_part) +
                     Rational(detail::digits_value(digits)) * pow10(-static_cast<long>(digits.size()));
  return s.sign * v;
}

}  // namespace hyperdec
