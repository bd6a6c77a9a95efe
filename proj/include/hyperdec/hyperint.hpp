#pragma once

// Integer backbone: affine ranks, eventual residues, hypernatural
// certificates, powers of ten at infinite rank and floors of limited values.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdec/error.hpp"
#include "hyperdec/exppoly.hpp"
#include "hyperdec/hyperreal.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

/// Position alpha*H + beta in an extended decimal expansion. Finite when
/// alpha == 0 (then beta >= 1).
class Rank {
 public:
  Rank() = default;

  static Rank finite(long k) {
    if (k < 1) throw Error(Errc::InvalidArgument, "finite rank must be >= 1, got " + std::to_string(k));
    return Rank(0, k);
  }
  static Rank infinite(long alpha, long beta = 0) {
    if (alpha < 1) throw Error(Errc::InvalidArgument, "infinite rank needs alpha >= 1");
    return Rank(alpha, beta);
  }

  /// Accepts "H", "H+3", "2H-1", "2*H-1" or a positive integer.
  static Rank parse(std::string_view text);

  long alpha() const noexcept { return alpha_; }
  long beta() const noexcept { return beta_; }
  bool is_infinite() const noexcept { return alpha_ >= 1; }

  /// The rank's value at sequence index n.
  long at(unsigned long n) const { return alpha_ * static_cast<long>(n) + beta_; }

  Rank shifted(long delta) const {
    if (alpha_ == 0) return finite(beta_ + delta);
    return Rank(alpha_, beta_ + delta);
  }

  friend Rank operator+(const Rank& a, const Rank& b) {
    if (a.alpha_ + b.alpha_ == 0) return finite(a.beta_ + b.beta_);
    return Rank(a.alpha_ + b.alpha_, a.beta_ + b.beta_);
  }

  friend bool operator==(const Rank&, const Rank&) = default;

  std::string to_string() const {
    if (alpha_ == 0) return std::to_string(beta_);
    std::string out = alpha_ == 1 ? "H" : std::to_string(alpha_) + "H";
    if (beta_ > 0) out += "+" + std::to_string(beta_);
    if (beta_ < 0) out += "-" + std::to_string(-beta_);
    return out;
  }

 private:
  Rank(long alpha, long beta) : alpha_(alpha), beta_(beta) {}

  long alpha_ = 0;
  long beta_ = 1;
};

inline Rank Rank::parse(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> Rank {
    throw SyntaxError(pos, {"H", "digits"}, "bad rank '" + std::string(text) + "': " + what);
  };
  auto read_int = [&](long& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stol(std::string(text.substr(start, pos - start)));
    return true;
  };
  long lead = 0;
  const bool has_lead = read_int(lead);
  if (pos == text.size()) {
    if (!has_lead) return fail("empty");
    return finite(lead);
  }
  if (has_lead && text[pos] == '*') ++pos;
  if (pos >= text.size() || text[pos] != 'H') return fail("expected H");
  ++pos;
  const long alpha = has_lead ? lead : 1;
  if (alpha < 1) return fail("coefficient of H must be positive");
  long beta = 0;
  if (pos < text.size()) {
    const char op = text[pos];
    if (op != '+' && op != '-') return fail("expected + or -");
    ++pos;
    if (!read_int(beta)) return fail("expected digits");
    if (op == '-') beta = -beta;
  }
  if (pos != text.size()) return fail("trailing characters");
  return infinite(alpha, beta);
}

/// Residues of a generator modulo `modulus` for n = 1, 2, ...: the first
/// `preperiod` indices are irregular, after which `cycle` repeats.
struct ResidueCycle {
  Integer modulus;
  unsigned long preperiod = 0;
  std::vector<Integer> cycle;

  /// Residue at index n >= 1 per this description (for n > preperiod).
  const Integer& at(unsigned long n) const { return cycle[(n - preperiod - 1) % cycle.size()]; }
};

namespace detail {

// Cycle lengths above this are refused rather than enumerated.
inline constexpr unsigned long kMaxCycle = 1ul << 22;

/// Preperiod and period of B^n mod m over n >= 1.
inline std::pair<unsigned long, unsigned long> power_cycle(const Integer& base, const Integer& m) {
  // B^n mod m is periodic once n exceeds every prime exponent of m, which is
  // at most log2(m).
  const unsigned long pre = mpz_sizeinbase(m.get_mpz_t(), 2);
  Integer start;
  mpz_powm_ui(start.get_mpz_t(), base.get_mpz_t(), pre + 1, m.get_mpz_t());
  Integer x = start;
  unsigned long period = 0;
  do {
    x = (x * base) % m;
    if (++period > kMaxCycle) throw Error(Errc::InvalidArgument, "residue cycle too long");
  } while (x != start);
  return {pre, period};
}

inline Integer residue_at(const ExpPoly& scaled, unsigned long n, const Integer& m) {
  Integer sum = 0;
  const Integer nz(n);
  for (const auto& t : scaled.terms()) {
    Integer b;
    mpz_powm_ui(b.get_mpz_t(), Integer(t.base.get_num()).get_mpz_t(), n, m.get_mpz_t());
    Integer k;
    mpz_powm_ui(k.get_mpz_t(), nz.get_mpz_t(), t.pow, m.get_mpz_t());
    sum += Integer(t.coeff.get_num()) * b * k;
  }
  return mod_floor(sum, m);
}

}  // namespace detail

/// Eventual residues of an integer-valued generator modulo m, with minimal
/// preperiod and minimal cycle.
///
/// Rational coefficients are allowed: with d the common denominator, d*P has
/// integer coefficients, P(n) mod m = ((d*P)(n) mod d*m) / d, and
/// integer-valuedness is exactly divisibility of those residues by d.
inline ResidueCycle residue_cycle(const ExpPoly& p, const Integer& m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");
  if (!p.has_integer_bases()) {
    throw Error(Errc::NotIntegerValued, "generator with non-integer base: " + p.to_string());
  }
  const Integer d = p.coeff_denominator_lcm();
  const ExpPoly scaled = p.scaled(Rational(d));
  const Integer big = d * m;

  unsigned long pre0 = 0;
  Integer period0 = 1;
  bool has_powers = false;
  for (const auto& t : scaled.terms()) {
    const auto [pre, per] = detail::power_cycle(Integer(t.base.get_num()), big);
    pre0 = std::max(pre0, pre);
    period0 = lcm(period0, Integer(per));
    has_powers = has_powers || t.pow > 0;
  }
  if (has_powers) period0 = lcm(period0, big);
  if (period0 > detail::kMaxCycle) throw Error(Errc::InvalidArgument, "residue cycle too long");
  const unsigned long len = period0.get_ui();

  // s[i] is the residue at index n = i + 1.
  std::vector<Integer> s;
  s.reserve(pre0 + 2 * len);
  for (unsigned long n = 1; n <= pre0 + 2 * len; ++n) s.push_back(detail::residue_at(scaled, n, big));

  unsigned long period = len;
  for (unsigned long cand = 1; cand <= len; ++cand) {
    if (len % cand) continue;
    bool ok = true;
    for (unsigned long i = pre0; i < pre0 + len && ok; ++i) ok = s[i] == s[i + cand];
    if (ok) { period = cand; break; }
  }
  unsigned long pre = pre0;
  while (pre > 0 && s[pre - 1] == s[pre - 1 + period]) --pre;

  ResidueCycle out{m, pre, {}};
  for (unsigned long i = pre; i < pre + period; ++i) {
    if (!mpz_divisible_p(s[i].get_mpz_t(), d.get_mpz_t())) {
      throw Error(Errc::NotIntegerValued, "generator is not eventually integer-valued: " + p.to_string());
    }
    out.cycle.push_back(Integer(s[i] / d));
  }
  return out;
}

inline bool divides_eventually(const Integer& d, const ExpPoly& p) {
  const ResidueCycle rc = residue_cycle(p, d);
  return std::all_of(rc.cycle.begin(), rc.cycle.end(), [](const Integer& r) { return r == 0; });
}

enum class CertificateKind { None, Syntactic, Divisibility };

struct HypernaturalCertificate {
  bool certified = false;
  CertificateKind kind = CertificateKind::None;
  /// Divisor d in x = P/d (1 for syntactic certificates).
  Integer divisor = 1;
  /// Index from which the generator is a non-negative integer.
  unsigned long threshold = 1;

  explicit operator bool() const noexcept { return certified; }
};

/// Sound but incomplete: certifies x = P (integer coefficients and bases,
/// eventually >= 0) or x = P/d with d dividing P eventually.
inline HypernaturalCertificate is_hypernatural(const HyperReal& x) {
  HypernaturalCertificate cert;
  if (!x.has_unit_denominator()) return cert;
  const ExpPoly& p = x.numerator();
  if (!p.has_integer_bases()) return cert;
  const SignReport sr = p.eventual_sign();
  if (sr.sign < 0) return cert;
  if (p.has_integer_coeffs()) {
    return {true, CertificateKind::Syntactic, 1, sr.threshold};
  }
  const Integer d = p.coeff_denominator_lcm();
  const ExpPoly scaled = p.scaled(Rational(d));
  const ResidueCycle rc = residue_cycle(scaled, d);
  for (const auto& r : rc.cycle) {
    if (r != 0) return cert;
  }
  return {true, CertificateKind::Divisibility, d, std::max(sr.threshold, rc.preperiod + 1)};
}

/// 10^(alpha*H + beta) = (10^alpha)^H * 10^beta.
inline HyperReal power10(const Rank& k) {
  if (!k.is_infinite()) return HyperReal(pow10(k.beta()));
  return HyperReal(ExpPoly::monomial(pow10(k.beta()), pow10(k.alpha()), 0));
}

/// 10^(-(alpha*H + beta)).
inline HyperReal inverse_power10(const Rank& k) {
  if (!k.is_infinite()) return HyperReal(pow10(-k.beta()));
  return HyperReal(ExpPoly::monomial(pow10(-k.beta()), pow10(-k.alpha()), 0));
}

/// Integer part of a limited hyperreal. With c = st(x): a negative
/// infinitesimal offset at an integer c floors to c - 1.
inline Integer floor_limited(const HyperReal& x) {
  const Rational c = st(x);
  const Integer fc = floor(c);
  if (is_integer(c) && x < HyperReal(c)) return fc - 1;
  return fc;
}

}  // namespace hyperdec
