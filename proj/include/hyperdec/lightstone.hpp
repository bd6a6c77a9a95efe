#pragma once

/**
 * @file lightstone.hpp
 * @brief Extended decimal digits at finite and infinite ranks.
 *
 * A limited hyperreal in atom form L + sum_j c_j * 10^-(a_j H + b_j) has a
 * digit at every rank K = a H + b, namely the class of the sequence
 * floor(10^K(n) * x(n)) mod 10. Scaled by 10^K every piece of the atom form
 * becomes q * 10^(s n + t); pieces with s >= 0 are exact rationals whose
 * digits repeat with the decimal period of q, pieces with s < 0 form an
 * infinitesimal tail that only matters at integer boundaries. Past a
 * computed index N* the digit sequence is therefore exactly periodic with a
 * computed period P, and probing P consecutive indices decides whether the
 * digit is a constant (certified) or depends on the choice of ultrafilter.
 *
 * Rendering follows the semicolon convention, e.g. for 1 - 10^-H:
 *
 *   0.999...;...99[@H]0...
 */

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperdec/error.hpp"
#include "hyperdec/exppoly.hpp"
#include "hyperdec/hyperint.hpp"
#include "hyperdec/hyperreal.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

struct AtomCorrection {
  Rational coeff;
  Rank rank;  // always infinite
};

/// L + sum_j c_j * 10^-(rank_j).
struct DecimalAtomForm {
  Rational base_value;
  std::vector<AtomCorrection> corrections;

  HyperReal value() const {
    HyperReal v(base_value);
    for (const auto& c : corrections) v += HyperReal(c.coeff) * inverse_power10(c.rank);
    return v;
  }

  /// Exact value of the representing sequence at index n.
  Rational eval_at(unsigned long n) const {
    Rational v = base_value;
    for (const auto& c : corrections) v += c.coeff * pow10(-c.rank.at(n));
    return v;
  }

  bool is_rational() const { return corrections.empty(); }
};

inline DecimalAtomForm to_atom_form(const HyperReal& x) {
  if (!is_limited(x)) throw Error(Errc::NotInAtomForm, "not limited: " + x.to_string());
  if (!x.has_unit_denominator()) {
    throw Error(Errc::NotInAtomForm, "not a finite sum of powers of ten: " + x.to_string());
  }
  DecimalAtomForm form{0, {}};
  for (const auto& t : x.numerator().terms()) {
    if (t.pow != 0) throw Error(Errc::NotInAtomForm, "term carries a power of H: " + x.to_string());
    if (t.base == 1) {
      form.base_value = t.coeff;
      continue;
    }
    // base must be 10^-alpha for some alpha >= 1
    const Integer den(t.base.get_den());
    if (t.base.get_num() != 1) throw Error(Errc::NotInAtomForm, "base is not a power of 1/10: " + x.to_string());
    Integer p = 1;
    long alpha = 0;
    while (p < den) { p *= 10; ++alpha; }
    if (p != den) throw Error(Errc::NotInAtomForm, "base is not a power of 1/10: " + x.to_string());
    form.corrections.push_back({t.coeff, Rank::infinite(alpha, 0)});
  }
  return form;
}

inline std::optional<DecimalAtomForm> try_atom_form(const HyperReal& x) {
  try {
    return to_atom_form(x);
  } catch (const Error& e) {
    if (e.code() != Errc::NotInAtomForm) throw;
    return std::nullopt;
  }
}

struct DigitAnswer {
  enum class Verdict { Digit, UltrafilterDependent };

  Verdict verdict = Verdict::Digit;
  int digit = 0;             // valid for Verdict::Digit
  std::vector<int> cycle;    // observed digits, one full period
  unsigned long probe_start = 1;
  unsigned long period = 1;
  bool certified = true;

  bool is_digit() const { return verdict == Verdict::Digit; }
  char symbol() const { return is_digit() ? static_cast<char>('0' + digit) : '?'; }
};

namespace detail {

inline int digit_of(const Rational& scaled) {
  return static_cast<int>(mod_floor(floor(scaled), Integer(10)).get_si());
}

/// Shortest repeating block of a finite observation.
inline std::vector<int> minimal_cycle(const std::vector<int>& seen) {
  for (std::size_t p = 1; p <= seen.size(); ++p) {
    if (seen.size() % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < seen.size() && ok; ++i) ok = seen[i] == seen[i - p];
    if (ok) return {seen.begin(), seen.begin() + static_cast<long>(p)};
  }
  return seen;
}

inline unsigned long ceil_div_at_least_one(long num, long den) {
  if (num <= den) return 1;  // den > 0
  return static_cast<unsigned long>((num + den - 1) / den);
}

inline DigitAnswer verdict_from(std::vector<int> seen, unsigned long start, unsigned long period, bool certified) {
  DigitAnswer a;
  a.probe_start = start;
  a.period = period;
  a.certified = certified;
  a.cycle = minimal_cycle(seen);
  if (a.cycle.size() == 1) {
    a.verdict = DigitAnswer::Verdict::Digit;
    a.digit = a.cycle.front();
  } else {
    a.verdict = DigitAnswer::Verdict::UltrafilterDependent;
  }
  return a;
}

// Probe periods above this are refused.
inline constexpr unsigned long kMaxProbePeriod = 100'000;

}  // namespace detail

/// Certified digit of x at rank k, i.e. of floor(10^k * x) mod 10.
inline DigitAnswer digit_at(const DecimalAtomForm& x, const Rank& k) {
  if (x.value() < HyperReal()) {
    throw Error(Errc::NonnegativityViolation, "digit extraction needs a non-negative value");
  }
  struct Piece {
    Rational q;
    long slope;
    long intercept;
  };
  std::vector<Piece> pieces;
  pieces.push_back({x.base_value, k.alpha(), k.beta()});
  for (const auto& c : x.corrections) {
    pieces.push_back({c.coeff, k.alpha() - c.rank.alpha(), k.beta() - c.rank.beta()});
  }

  unsigned long start = 1;
  if (k.is_infinite()) start = detail::ceil_div_at_least_one(1 - k.beta(), k.alpha());
  Integer gap_den = 1;
  Integer period = 1;
  std::vector<ExpTerm> tail;
  for (const auto& p : pieces) {
    if (p.q == 0) continue;
    if (p.slope > 0) {
      // (q * 10^e) mod 10 = 10 * frac(q * 10^(e-1)) is purely periodic in e
      // once e - 1 reaches the decimal preperiod of q.
      const Integer den(p.q.get_den());
      const long pre = static_cast<long>(decimal_preperiod(den));
      start = std::max(start, detail::ceil_div_at_least_one(pre + 1 - p.intercept, p.slope));
      gap_den = lcm(gap_den, coprime_to_ten(den));
      period = lcm(period, Integer(decimal_period(den)));
    } else if (p.slope == 0) {
      const Rational v = p.q * pow10(p.intercept);
      gap_den = lcm(gap_den, Integer(v.get_den()));
    } else {
      tail.push_back({p.q * pow10(p.intercept), pow10(p.slope), 0});
    }
  }
  const ExpPoly delta = ExpPoly::normalize(tail);
  if (!delta.is_zero()) {
    // sign of the tail settles, and its size drops below 1/gap_den so it can
    // only move the floor across an exact integer
    start = std::max(start, delta.eventual_sign().threshold);
    std::vector<ExpTerm> slack{{Rational(1, 1) / Rational(gap_den), Rational(1), 0}};
    for (const auto& t : delta.terms()) slack.push_back({-abs(t.coeff), t.base, 0});
    const SignReport room = ExpPoly::normalize(slack).eventual_sign();
    start = std::max(start, room.threshold);
  }
  if (period > detail::kMaxProbePeriod) throw Error(Errc::InvalidArgument, "digit period too long to probe");
  const unsigned long p = period.get_ui();

  std::vector<int> seen;
  seen.reserve(p);
  for (unsigned long n = start; n < start + p; ++n) {
    seen.push_back(detail::digit_of(pow10(k.at(n)) * x.eval_at(n)));
  }
  return detail::verdict_from(std::move(seen), start, p, true);
}

/// Uncertified probe for values outside atom form: observes `count`
/// consecutive indices past the denominator's sign threshold.
inline DigitAnswer probe_digit(const HyperReal& x, const Rank& k, unsigned long count = 12) {
  unsigned long start = x.denominator().eventual_sign().threshold;
  if (k.is_infinite()) start = std::max(start, detail::ceil_div_at_least_one(1 - k.beta(), k.alpha()));
  std::vector<int> seen;
  for (unsigned long n = start; n < start + count; ++n) {
    const auto v = x.eval_at(n);
    if (!v) throw Error(Errc::DivisionByZero, "denominator vanishes at a probe index");
    seen.push_back(detail::digit_of(pow10(k.at(n)) * *v));
  }
  DigitAnswer a = detail::verdict_from(std::move(seen), start, count, false);
  return a;
}

/// k-th digit after the point of a limited hyperreal: floor(10^k x) mod 10.
inline int digit_finite(const HyperReal& x, long k) {
  const Integer f = floor_limited(HyperReal(pow10(k)) * x);
  return static_cast<int>(mod_floor(f, Integer(10)).get_si());
}

inline int digit_finite(const DecimalAtomForm& x, long k) { return digit_finite(x.value(), k); }

struct RankWindow {
  Rank center;
  unsigned long halfwidth = 0;
};

struct RenderSpec {
  unsigned long finite_window = 3;
  std::vector<RankWindow> rank_windows;
  /// Render terminating rationals with a trailing tail of 9s.
  bool repeat9 = false;
};

namespace detail {

/// Number of fractional digits of a terminating rational, if it terminates.
inline std::optional<long> terminating_length(const Rational& q) {
  const Integer den(q.get_den());
  if (coprime_to_ten(den) != 1) return std::nullopt;
  return static_cast<long>(decimal_preperiod(den));
}

inline std::string window_text(const RankWindow& w, const std::function<char(const Rank&)>& digit) {
  std::string out;
  const long hw = static_cast<long>(w.halfwidth);
  for (long off = -hw; off <= hw; ++off) {
    out += digit(w.center.shifted(off));
    if (off == 0) out += "[@" + w.center.to_string() + "]";
  }
  return out;
}

}  // namespace detail

/// Semicolon rendering: `<int>.<finite digits>...;` followed by one
/// `...<digits>` block per rank window and a closing `...`.
inline std::string render(const HyperReal& x, const RenderSpec& spec) {
  if (spec.finite_window < 1) throw Error(Errc::InvalidArgument, "finite window must be >= 1");
  if (!is_limited(x)) throw Error(Errc::NotLimited, "render needs a limited value: " + x.to_string());
  if (x < HyperReal()) return "-" + render(-x, spec);

  Integer int_part;
  std::function<char(long)> finite_digit;
  std::function<char(const Rank&)> infinite_digit;

  const auto q = x.as_rational();
  const auto term_len = q ? detail::terminating_length(*q) : std::nullopt;
  if (spec.repeat9 && term_len && *q != 0) {
    // the expansion of q - 10^-T, followed by 9s forever
    const long len = *term_len;
    const Rational lowered = *q - pow10(-len);
    int_part = floor(lowered);
    finite_digit = [lowered, len](long k) {
      return k <= len ? static_cast<char>('0' + detail::digit_of(lowered * pow10(k))) : '9';
    };
    infinite_digit = [](const Rank&) { return '9'; };
  } else {
    int_part = floor_limited(x);
    finite_digit = [&x](long k) { return static_cast<char>('0' + digit_finite(x, k)); };
    std::optional<DecimalAtomForm> form;
    if (!spec.rank_windows.empty()) form = to_atom_form(x);
    infinite_digit = [form](const Rank& r) { return digit_at(*form, r).symbol(); };
  }

  std::string out = to_string(int_part) + ".";
  for (unsigned long k = 1; k <= spec.finite_window; ++k) out += finite_digit(static_cast<long>(k));
  out += "...;";
  for (const auto& w : spec.rank_windows) {
    if (!w.center.is_infinite()) throw Error(Errc::InvalidArgument, "rank windows must be centred at infinite ranks");
    out += "..." + detail::window_text(w, infinite_digit);
  }
  if (!spec.rank_windows.empty()) out += "...";
  return out;
}

}  // namespace hyperdec
