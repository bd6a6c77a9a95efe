#pragma once

#include <utility>
#include <vector>

#include "hyperdec/error.hpp"
#include "hyperdec/exppoly.hpp"
#include "hyperdec/hyperint.hpp"
#include "hyperdec/hyperreal.hpp"

namespace hyperdec {

/// x = hyperint_part + real_part + infinitesimal_part with real_part in
/// [0, 1). The infinitesimal part may be negative.
struct Decomposition {
  HyperReal hyperint_part;
  Rational real_part;
  HyperReal infinitesimal_part;
};

namespace detail {

/// Splits num/den into its unbounded principal part Q (an ExpPoly) and a
/// limited remainder R/den, by long division on leading terms while the
/// quotient term is above the constant key.
inline std::pair<ExpPoly, ExpPoly> principal_part(const ExpPoly& num, const ExpPoly& den) {
  std::vector<ExpTerm> quotient;
  ExpPoly rem = num;
  constexpr int kMaxSteps = 256;
  for (int step = 0; !rem.is_zero(); ++step) {
    const DominanceKey qkey = key_of(rem.leading()) / key_of(den.leading());
    if (compare(qkey, unit_key()) <= 0) break;
    if (step == kMaxSteps || qkey.pow < 0) {
      throw Error(Errc::NotDecomposable, "infinite part is not an exponential polynomial");
    }
    ExpTerm q{rem.leading().coeff / den.leading().coeff, qkey.base, static_cast<unsigned>(qkey.pow)};
    rem = rem - den * ExpPoly::normalize({q});
    quotient.push_back(std::move(q));
  }
  return {ExpPoly::normalize(std::move(quotient)), rem};
}

inline Decomposition decompose_nonnegative(const HyperReal& x) {
  if (is_limited(x)) {
    const Rational c = st(x);
    const Integer g = floor(c);
    return {HyperReal(Rational(g)), c - g, x - HyperReal(c)};
  }
  auto [q, rem] = principal_part(x.numerator(), x.denominator());
  const HyperReal limited_rest(rem, x.denominator());
  const Rational c = st(limited_rest);

  // Q = P/d with P integer-coefficient; Q - rho/d is integer-valued exactly
  // when every eventual residue of P mod d equals the same rho.
  if (!q.has_integer_bases()) {
    throw Error(Errc::NotDecomposable, "infinite part has a non-integer base: " + q.to_string());
  }
  const Integer d = q.coeff_denominator_lcm();
  Rational shift = 0;
  if (d > 1) {
    const ResidueCycle rc = residue_cycle(q.scaled(Rational(d)), d);
    for (const auto& r : rc.cycle) {
      if (r != rc.cycle.front()) {
        throw Error(Errc::NotDecomposable, "infinite part is not eventually integer-valued: " + q.to_string());
      }
    }
    shift = Rational(rc.cycle.front(), d);
    shift.canonicalize();
  }
  const Rational constant = c + shift;
  const Integer g = floor(constant);
  const HyperReal hyperint = HyperReal(q) - HyperReal(shift) + HyperReal(Rational(g));
  if (!is_hypernatural(hyperint)) {
    throw Error(Errc::NotDecomposable, "could not certify the hyperinteger part: " + hyperint.to_string());
  }
  return {hyperint, constant - g, limited_rest - HyperReal(c)};
}

}  // namespace detail

/// Triple decomposition G + r + eps. Negative inputs mirror the
/// non-negative case: -(G + r + e) = (-G - 1) + (1 - r) - e when r > 0.
inline Decomposition decompose(const HyperReal& x) {
  if (x >= HyperReal()) return detail::decompose_nonnegative(x);
  Decomposition m = detail::decompose_nonnegative(-x);
  if (m.real_part == 0) return {-m.hyperint_part, Rational(0), -m.infinitesimal_part};
  return {-m.hyperint_part - HyperReal(1), 1 - m.real_part, -m.infinitesimal_part};
}

}  // namespace hyperdec
