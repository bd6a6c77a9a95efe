#pragma once

/**
 * @file calculus.hpp
 * @brief Calculus through standard parts.
 *
 * Real functions here are rational functions over Q; their natural extension
 * is plain substitution into the hyperreal field. Every quantifier "for all
 * infinitesimals" is replaced by a finite ProbeSet, so the checkers below
 * are falsifiers, not verifiers: a `true` means no probe found a failure.
 */

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hyperdec/error.hpp"
#include "hyperdec/hyperint.hpp"
#include "hyperdec/hyperreal.hpp"
#include "hyperdec/polynomial.hpp"
#include "hyperdec/rational.hpp"

namespace hyperdec {

/// Non-empty list of nonzero infinitesimals standing in for "every
/// infinitesimal".
class ProbeSet {
 public:
  explicit ProbeSet(std::vector<HyperReal> probes) : probes_(std::move(probes)) {
    if (probes_.empty()) throw Error(Errc::InvalidArgument, "probe set must not be empty");
    for (const auto& p : probes_) {
      if (p.is_zero() || !is_infinitesimal(p)) {
        throw Error(Errc::InvalidArgument, "probe is not a nonzero infinitesimal: " + p.to_string());
      }
    }
  }

  /// {1/H, -1/H, 1/H^2, 1/2^H}
  static ProbeSet defaults() {
    const HyperReal h = H();
    return ProbeSet({HyperReal(1) / h, HyperReal(-1) / h, HyperReal(1) / (h * h), HyperReal::geometric(Rational(1, 2))});
  }

  const std::vector<HyperReal>& probes() const& noexcept { return probes_; }
  std::vector<HyperReal> probes() && { return std::move(probes_); }

 private:
  std::vector<HyperReal> probes_;
};

/// f*(x): exact substitution.
inline HyperReal extend_eval(const RationalFunction& f, const HyperReal& x) {
  const HyperReal d = f.denominator()(x);
  if (d.is_zero()) throw Error(Errc::PoleAtArgument, "pole at " + x.to_string());
  return f.numerator()(x) / d;
}

inline Rational eval_real(const RationalFunction& f, const Rational& q) {
  const Rational d = f.denominator()(q);
  if (d == 0) throw Error(Errc::PoleAtArgument, "pole at " + to_string(q));
  return f.numerator()(q) / d;
}

/// st((f(q + e) - f(q)) / e), required to agree across every probe.
inline Rational derivative(const RationalFunction& f, const Rational& q,
                           const ProbeSet& probes = ProbeSet::defaults()) {
  const HyperReal fq(eval_real(f, q));
  std::optional<Rational> common;
  for (const auto& eps : probes.probes()) {
    const HyperReal quotient = (extend_eval(f, HyperReal(q) + eps) - fq) / eps;
    if (is_infinite(quotient)) {
      throw Error(Errc::ProbeDisagreement, "difference quotient is infinite for probe " + eps.to_string());
    }
    const Rational value = st(quotient);
    if (common && *common != value) {
      throw Error(Errc::ProbeDisagreement, "probes disagree: " + to_string(*common) + " vs " + to_string(value));
    }
    common = value;
  }
  return *common;
}

/// lim u_n = st(u_H) for the sequence represented by x.
inline Rational limit_of(const HyperReal& x) {
  if (is_infinite(x)) throw Error(Errc::NotLimited, "sequence diverges: " + x.to_string());
  return st(x);
}

/// Bernoulli number B_k (B_1 = -1/2) from sum_{j<=k} C(k+1, j) B_j = 0.
/// The table only grows and entries never change once written.
inline Rational bernoulli(std::size_t k) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= k) {
    const std::size_t m = table.size();
    Rational acc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += Rational(binom) * table[j];
    }
    table.push_back(-acc / static_cast<unsigned long>(m + 1));
  }
  return table[k];
}

/// S_k(K) = sum_{i=0}^{K} i^k as a polynomial in K (Faulhaber).
inline Polynomial faulhaber(std::size_t k) {
  std::vector<Rational> c(k + 2, Rational(0));
  for (std::size_t j = 0; j <= k; ++j) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), k + 1, j);
    c[k + 1 - j] += Rational(binom) * bernoulli(j) / static_cast<unsigned long>(k + 1);
  }
  c[k] += 1;  // the formula sums to K - 1; add the K^k term
  return Polynomial(std::move(c));
}

/// sum_{i=0}^{upper} p(i). Infinite ranks go through Faulhaber closed forms;
/// finite ranks are summed directly.
inline HyperReal hyperfinite_sum(const Polynomial& p, const Rank& upper) {
  if (!upper.is_infinite()) {
    Rational total = 0;
    for (long i = 0; i <= upper.beta(); ++i) total += p(Rational(i));
    return HyperReal(total);
  }
  Polynomial closed;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeff(k) != 0) closed = closed + faulhaber(k).scaled(p.coeff(k));
  }
  const HyperReal top = HyperReal(upper.alpha()) * H() + HyperReal(upper.beta());
  return closed(top);
}

/// st of the left Riemann sum over H equal parts:
/// sum_{i=0}^{H-1} f(a + i*dx) dx with dx = (b - a)/H.
inline Rational integral(const Polynomial& f, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(Errc::InvalidArgument, "integral needs a < b");
  const HyperReal dx = HyperReal(Rational(b - a)) / H();
  const Polynomial g = f.shifted(a);  // f(a + t) = sum_k g_k t^k
  const Rank last = Rank::infinite(1, -1);
  HyperReal total;
  HyperReal dx_power = dx;
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    if (g.coeff(k) != 0) {
      total += HyperReal(g.coeff(k)) * dx_power * hyperfinite_sum(Polynomial::monomial(1, k), last);
    }
    dx_power *= dx;
  }
  return st(total);
}

struct ContinuityResult {
  bool holds = true;
  std::optional<HyperReal> witness;  // probe with f(c + e) not close to f(c)

  explicit operator bool() const noexcept { return holds; }
};

/// y ~ c implies f(y) ~ f(c), tested at y = c + e for every probe e.
inline ContinuityResult continuity_check(const RationalFunction& f, const Rational& c,
                                         const ProbeSet& probes = ProbeSet::defaults()) {
  const HyperReal fc(eval_real(f, c));
  for (const auto& eps : probes.probes()) {
    if (!cluster_eq(extend_eval(f, HyperReal(c) + eps), fc)) return {false, eps};
  }
  return {};
}

struct UniformContinuityResult {
  bool holds = true;
  std::optional<std::pair<HyperReal, HyperReal>> witness_args;
  std::optional<std::pair<HyperReal, HyperReal>> witness_values;

  explicit operator bool() const noexcept { return holds; }
};

/// Pairs of infinitely close points of [a, b]*, several hugging the ends.
inline std::vector<std::pair<HyperReal, HyperReal>> default_pairs(const Rational& a, const Rational& b) {
  const HyperReal h = H();
  const HyperReal inv = HyperReal(1) / h;
  const HyperReal lo(a), hi(b), mid(Rational((a + b) / 2));
  return {
      {lo, lo + inv},
      {lo + inv, lo + HyperReal(2) * inv},
      {hi - HyperReal(2) * inv, hi - inv},
      {hi - inv, hi},
      {mid, mid + inv * inv},
      {mid - inv, mid + HyperReal::geometric(Rational(1, 2))},
  };
}

/// x ~ y implies f(x) ~ f(y) over the given pairs of points in [a, b]*.
inline UniformContinuityResult uniform_continuity_check(const RationalFunction& f, const Rational& a,
                                                        const Rational& b,
                                                        const std::vector<std::pair<HyperReal, HyperReal>>& pairs) {
  if (!(a < b)) throw Error(Errc::InvalidArgument, "interval needs a < b");
  const HyperReal lo(a), hi(b);
  for (const auto& [x, y] : pairs) {
    for (const HyperReal* p : {&x, &y}) {
      if (*p < lo || *p > hi) throw Error(Errc::InvalidArgument, "pair point outside the interval: " + p->to_string());
    }
    if (!cluster_eq(x, y)) throw Error(Errc::InvalidArgument, "pair points are not infinitely close");
    HyperReal fx, fy;
    try {
      fx = extend_eval(f, x);
      fy = extend_eval(f, y);
    } catch (const Error& e) {
      if (e.code() == Errc::PoleAtArgument) throw Error(Errc::PoleInInterval, e.what());
      throw;
    }
    if (!cluster_eq(fx, fy)) {
      UniformContinuityResult r;
      r.holds = false;
      r.witness_args = {x, y};
      r.witness_values = {fx, fy};
      return r;
    }
  }
  return {};
}

inline UniformContinuityResult uniform_continuity_check(const RationalFunction& f, const Rational& a,
                                                        const Rational& b) {
  return uniform_continuity_check(f, a, b, default_pairs(a, b));
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer("1000000000000")) throw Error(Errc::InvalidArgument, "coefficient too large for the rational root test");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All rational roots, by the rational root test on the integer-scaled
/// polynomial. Sorted ascending.
inline std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "every number is a root of the zero polynomial");
  Integer scale = 1;
  for (const auto& c : p.coeffs()) scale = lcm(scale, Integer(c.get_den()));
  std::vector<Integer> ints;
  for (const auto& c : p.coeffs()) ints.push_back(Integer(c * Rational(scale)));
  std::set<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  const Integer& a0 = ints[low];
  const Integer& an = ints.back();
  if (static_cast<long>(ints.size() - low) > 1) {
    for (const Integer& num : detail::positive_divisors(a0)) {
      for (const Integer& den : detail::positive_divisors(an)) {
        for (int s : {1, -1}) {
          const Rational cand = make_rational(Integer(s * num), den);
          if (p(cand) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

struct EvtResult {
  Rational argmax;
  Rational max;
  /// (n, max_i f(i/n)) for the finite partitions checked.
  std::vector<std::pair<unsigned long, Rational>> partition_maxima;
};

/// 0, 1 and the rational critical points in [0, 1].
inline std::vector<Rational> evt_candidates(const Polynomial& f) {
  std::set<Rational> c{Rational(0), Rational(1)};
  const Polynomial df = f.derivative();
  if (!df.is_zero()) {
    for (const auto& r : rational_roots(df)) {
      if (r >= 0 && r <= 1) c.insert(r);
    }
  }
  return {c.begin(), c.end()};
}

/// Maximum of f on [0, 1] over the candidate points, checked against the
/// finite partitions i/n for n = 10, 100, 1000: each partition maximum must
/// not exceed the candidate maximum and must sit within L/n of it, L being
/// a bound for |f'| on [0, 1]. This is a demonstration of the hyperfinite
/// partition argument at desk scale, not a proof.
inline EvtResult evt_demo(const Polynomial& f, std::vector<Rational> candidates = {}) {
  if (candidates.empty()) candidates = evt_candidates(f);
  std::sort(candidates.begin(), candidates.end());
  EvtResult out{candidates.front(), f(candidates.front()), {}};
  for (const auto& c : candidates) {
    if (c < 0 || c > 1) throw Error(Errc::InvalidArgument, "candidate outside [0, 1]: " + to_string(c));
    const Rational v = f(c);
    if (v > out.max) {
      out.max = v;
      out.argmax = c;
    }
  }
  Rational lipschitz = 0;
  const Polynomial df = f.derivative();
  for (const auto& c : df.coeffs()) lipschitz += abs(c);
  for (unsigned long n : {10ul, 100ul, 1000ul}) {
    Rational best = f(Rational(0));
    for (unsigned long i = 1; i <= n; ++i) {
      const Rational v = f(make_rational(Integer(i), Integer(n)));
      if (v > best) best = v;
    }
    if (best > out.max || out.max - best > lipschitz / n) {
      throw Error(Errc::CandidateSetIncomplete,
                  "partition maximum " + to_string(best) + " at n = " + std::to_string(n) +
                      " is not matched by the candidates");
    }
    out.partition_maxima.emplace_back(n, best);
  }
  return out;
}

}  // namespace hyperdec
