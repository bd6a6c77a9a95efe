#pragma once

/**
 * @file exppoly.hpp
 * @brief Exponential polynomials: finite sums of c * B^n * n^k.
 *
 * An ExpPoly is a symbolic sequence generator indexed by n >= 1. Coefficients
 * and bases are exact rationals (B > 0), powers are non-negative integers.
 * The set is closed under +, - and *, and every element has a decidable
 * eventual sign: terms are ordered by their dominance key (B, k) compared
 * lexicographically, and the largest key eventually outgrows the rest.
 *
 *   (2^n - n^3).eventual_sign() == {+1, 10}
 *
 * because 2^n > n^3 for every n >= 10, and that threshold is certified
 * rather than observed.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperdec/error.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

struct ExpTerm {
  Rational coeff;
  Rational base{1};
  unsigned pow = 0;
};

/// Dominance key (base, pow). Pow is signed so that key quotients can be
/// formed before checking they are still valid terms.
struct DominanceKey {
  Rational base{1};
  long pow = 0;

  friend int compare(const DominanceKey& a, const DominanceKey& b) {
    if (int c = cmp(a.base, b.base); c != 0) return c < 0 ? -1 : 1;
    if (a.pow != b.pow) return a.pow < b.pow ? -1 : 1;
    return 0;
  }
  friend bool operator==(const DominanceKey& a, const DominanceKey& b) { return compare(a, b) == 0; }

  friend DominanceKey operator*(const DominanceKey& a, const DominanceKey& b) {
    return {a.base * b.base, a.pow + b.pow};
  }
  friend DominanceKey operator/(const DominanceKey& a, const DominanceKey& b) {
    return {a.base / b.base, a.pow - b.pow};
  }
};

inline DominanceKey key_of(const ExpTerm& t) { return {t.base, static_cast<long>(t.pow)}; }

/// The constant sequence has key (1, 0); anything above it is unbounded,
/// anything below it tends to zero.
inline const DominanceKey& unit_key() {
  static const DominanceKey key{Rational(1), 0};
  return key;
}

struct SignReport {
  int sign = 0;
  unsigned long threshold = 1;
};

namespace detail {

// Upper limit for threshold searches; bases this close together need
// exponents too large to evaluate exactly anyway.
inline constexpr unsigned long kSearchCap = 1ul << 22;

/// Smallest n >= lo with pred(n) true, for a predicate that stays true once
/// it becomes true. Doubling then bisection.
template <class Pred>
unsigned long first_true_from(unsigned long lo, Pred pred) {
  if (pred(lo)) return lo;
  unsigned long bad = lo;
  unsigned long step = 1;
  unsigned long hi = lo + step;
  while (!pred(hi)) {
    bad = hi;
    step *= 2;
    hi = lo + step;
    if (hi > kSearchCap) throw Error(Errc::InvalidArgument, "eventual-sign threshold search exceeded cap");
  }
  while (hi - bad > 1) {
    const unsigned long mid = bad + (hi - bad) / 2;
    if (pred(mid)) hi = mid; else bad = mid;
  }
  return hi;
}

inline Rational rational_power(const Rational& base, unsigned long n) {
  Rational r(pow(Integer(base.get_num()), n), pow(Integer(base.get_den()), n));
  return r;  // already canonical: coprime parts stay coprime
}

}  // namespace detail

class ExpPoly {
 public:
  ExpPoly() = default;

  /// Merges equal keys, drops zero coefficients, sorts by descending key.
  static ExpPoly normalize(std::vector<ExpTerm> terms) {
    for (auto& t : terms) {
      t.coeff.canonicalize();
      t.base.canonicalize();
      if (t.base <= 0) throw Error(Errc::InvalidTerm, "term base must be positive, got " + hyperdec::to_string(t.base));
    }
    std::sort(terms.begin(), terms.end(), [](const ExpTerm& a, const ExpTerm& b) {
      return compare(key_of(a), key_of(b)) > 0;
    });
    ExpPoly out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && compare(key_of(out.terms_.back()), key_of(t)) == 0) {
        out.terms_.back().coeff += t.coeff;
      } else {
        out.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(out.terms_, [](const ExpTerm& t) { return t.coeff == 0; });
    return out;
  }

  static ExpPoly constant(const Rational& c) { return monomial(c, Rational(1), 0); }

  static ExpPoly monomial(const Rational& coeff, const Rational& base, unsigned pow) {
    return normalize({ExpTerm{coeff, base, pow}});
  }

  /// The identity sequence n.
  static ExpPoly identity() { return monomial(Rational(1), Rational(1), 1); }

  const std::vector<ExpTerm>& terms() const& noexcept { return terms_; }
  std::vector<ExpTerm> terms() && { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Leading (dominant) term. Precondition: not zero.
  const ExpTerm& leading() const { return terms_.front(); }
  const ExpTerm& trailing() const { return terms_.back(); }

  std::optional<Rational> as_constant() const {
    if (is_zero()) return Rational(0);
    if (terms_.size() == 1 && key_of(terms_[0]) == unit_key()) return terms_[0].coeff;
    return std::nullopt;
  }

  bool has_integer_bases() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return is_integer(t.base); });
  }
  bool has_integer_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const ExpTerm& t) { return is_integer(t.coeff); });
  }

  /// Least common multiple of the coefficient denominators.
  Integer coeff_denominator_lcm() const {
    Integer d = 1;
    for (const auto& t : terms_) d = lcm(d, Integer(t.coeff.get_den()));
    return d;
  }

  ExpPoly operator-() const {
    ExpPoly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    std::vector<ExpTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return normalize(std::move(all));
  }
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    std::vector<ExpTerm> all;
    all.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        all.push_back({s.coeff * t.coeff, s.base * t.base, s.pow + t.pow});
      }
    }
    return normalize(std::move(all));
  }

  ExpPoly scaled(const Rational& c) const {
    if (c == 0) return {};
    ExpPoly out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }

  /// Divides every term by base^n * n^pow. Requires every term's pow >= pow.
  ExpPoly divided_by_monomial(const Rational& base, unsigned pow) const {
    ExpPoly out = *this;
    for (auto& t : out.terms_) {
      if (t.pow < pow) throw Error(Errc::InvalidTerm, "monomial division leaves a negative power of n");
      t.base /= base;
      t.pow -= pow;
    }
    return out;  // dividing by a common monomial preserves the key order
  }

  unsigned min_pow() const {
    unsigned k = std::numeric_limits<unsigned>::max();
    for (const auto& t : terms_) k = std::min(k, t.pow);
    return is_zero() ? 0 : k;
  }

  /// Exact value of the generator at index n >= 1.
  Rational eval_at(unsigned long n) const {
    if (n == 0) throw Error(Errc::InvalidArgument, "generators are indexed from n = 1");
    Rational sum = 0;
    const Integer nz(n);
    for (const auto& t : terms_) {
      Rational term = t.coeff * detail::rational_power(t.base, n);
      if (t.pow) term *= Rational(pow(nz, t.pow));
      sum += term;
    }
    return sum;
  }

  /// Sign of the dominant coefficient plus a certified N0 such that the
  /// dominant term outweighs the sum of all others for every n >= N0.
  ///
  /// For t terms it suffices that each other term stays below 1/(t-1) of the
  /// dominant one. Each ratio other/dominant is eventually non-increasing
  /// (certified from ratio(n+1)/ratio(n) = (B'/B)((n+1)/n)^(k'-k)), so both
  /// conditions have monotone predicates and are located by search.
  SignReport eventual_sign() const {
    if (is_zero()) return {0, 1};
    const ExpTerm& dom = leading();
    SignReport report{sign(dom.coeff), 1};
    if (terms_.size() == 1) return report;

    const unsigned long share = terms_.size() - 1;
    for (std::size_t j = 1; j < terms_.size(); ++j) {
      const ExpTerm& other = terms_[j];
      const Rational base_ratio = other.base / dom.base;
      const long dpow = static_cast<long>(other.pow) - static_cast<long>(dom.pow);

      unsigned long monotone_from = 1;
      if (base_ratio < 1 && dpow > 0) {
        // (B'/B) * ((m+1)/m)^dpow <= 1, decreasing in m.
        monotone_from = detail::first_true_from(1, [&](unsigned long m) {
          const Rational growth(Integer(m + 1), Integer(m));
          return base_ratio * pow(growth, dpow) <= 1;
        });
      }
      const Rational scale = abs(other.coeff) / abs(dom.coeff) * share;
      const unsigned long below_from = detail::first_true_from(monotone_from, [&](unsigned long n) {
        Rational r = scale * detail::rational_power(base_ratio, n);
        r *= pow(Rational(static_cast<long>(n)), dpow);
        return r < 1;
      });
      report.threshold = std::max(report.threshold, below_from);
    }
    return report;
  }

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& s = a.terms_[i];
      const auto& t = b.terms_[i];
      if (s.pow != t.pow || s.base != t.base || s.coeff != t.coeff) return false;
    }
    return true;
  }

  /// Renders in the expression grammar, e.g. "2^H - H^3" or "1 - 10^-H".
  std::string to_string(std::string_view var = "H") const;

 private:
  std::vector<ExpTerm> terms_;
};

namespace detail {

inline std::string base_power_text(const Rational& base, std::string_view var) {
  const std::string v(var);
  if (is_integer(base)) return to_string(base) + "^" + v;
  if (base.get_num() == 1) return to_string(Integer(base.get_den())) + "^-" + v;
  return "(" + to_string(base) + ")^" + v;
}

/// Term text without its sign; `bare` is set when the text is a single
/// factor that needs no parentheses as a divisor.
inline std::string term_magnitude_text(const ExpTerm& t, std::string_view var, bool* bare = nullptr) {
  const Rational mag = abs(t.coeff);
  std::vector<std::string> factors;
  if (t.base != 1) factors.push_back(base_power_text(t.base, var));
  if (t.pow == 1) factors.emplace_back(var);
  else if (t.pow > 1) factors.push_back(std::string(var) + "^" + std::to_string(t.pow));
  std::string out;
  if (factors.empty() || mag != 1) {
    out = to_string(mag);
    if (!factors.empty()) out += "*";
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  if (bare) *bare = (factors.size() == 1 && mag == 1) || (factors.empty() && is_integer(mag));
  return out;
}

}  // namespace detail

inline std::string ExpPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    const bool neg = t.coeff < 0;
    if (i == 0) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += detail::term_magnitude_text(t, var);
  }
  return out;
}

}  // namespace hyperdec
