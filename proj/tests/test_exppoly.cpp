#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperdec;

namespace {

ExpPoly two_pow_minus_cube() {
  return ExpPoly::normalize({{Rational(1), Rational(2), 0}, {Rational(-1), Rational(1), 3}});
}

}  // namespace

TEST(ExpPoly, NormalizeCancelsAndMerges) {
  EXPECT_TRUE(ExpPoly::normalize({{Rational(3), Rational(2), 0}, {Rational(-3), Rational(2), 0}}).is_zero());
  const ExpPoly merged = ExpPoly::normalize({{Rational(1), Rational(1), 2}, {Rational(2), Rational(1), 2}});
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged.leading().coeff, 3);
  EXPECT_EQ(merged.leading().pow, 2u);
}

TEST(ExpPoly, NormalizeOrdersByDominance) {
  const ExpPoly p = two_pow_minus_cube();
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.leading().base, 2);
  EXPECT_GT(oracle::eval(ExpPoly::monomial(1, 2, 0), 20), oracle::eval(ExpPoly::monomial(1, 1, 3), 20));
}

TEST(ExpPoly, NormalizeRejectsNonPositiveBase) {
  EXPECT_THROW(ExpPoly::normalize({{Rational(1), Rational(0), 0}}), Error);
  EXPECT_THROW(ExpPoly::normalize({{Rational(1), Rational(-2), 1}}), Error);
}

TEST(ExpPoly, ArithmeticExamples) {
  EXPECT_EQ(ExpPoly::monomial(1, 2, 0) * ExpPoly::monomial(1, 3, 0), ExpPoly::monomial(1, 6, 0));
  EXPECT_EQ(ExpPoly::identity() * ExpPoly::identity(), ExpPoly::monomial(1, 1, 2));
  EXPECT_EQ((ExpPoly::monomial(1, 2, 0) - ExpPoly::constant(1)) + ExpPoly::constant(1), ExpPoly::monomial(1, 2, 0));
}

TEST(ExpPoly, EvalAtExamples) {
  EXPECT_EQ(two_pow_minus_cube().eval_at(9), -217);
  EXPECT_EQ(two_pow_minus_cube().eval_at(10), 24);
  EXPECT_EQ(ExpPoly().eval_at(5), 0);
}

TEST(ExpPoly, EventualSignExamples) {
  const SignReport a = two_pow_minus_cube().eventual_sign();
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(a.threshold, 10u);
  const SignReport z = ExpPoly().eventual_sign();
  EXPECT_EQ(z.sign, 0);
  EXPECT_EQ(z.threshold, 1u);
  const ExpPoly q = ExpPoly::normalize({{Rational(-1), Rational(1), 2}, {Rational(1), Rational(1), 1}});
  const SignReport b = q.eventual_sign();
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.threshold, 2u);
}

TEST(ExpPoly, EventualSignThresholdIsTightForTwoPowMinusCube) {
  // the last sign change falls between 9 and 10
  for (unsigned long n = 10; n <= 12; ++n) {
    EXPECT_EQ(oracle::sign_of(oracle::eval(two_pow_minus_cube(), n)), 1) << n;
  }
  EXPECT_EQ(oracle::sign_of(oracle::eval(two_pow_minus_cube(), 9)), -1);
}

TEST(ExpPoly, ToString) {
  EXPECT_EQ(two_pow_minus_cube().to_string(), "2^H - H^3");
  EXPECT_EQ((ExpPoly::constant(1) - ExpPoly::monomial(1, Rational(1, 10), 0)).to_string(), "1 - 10^-H");
  EXPECT_EQ(ExpPoly::monomial(Rational(-1, 220), Rational(1, 100), 0).to_string(), "-1/220*100^-H");
  EXPECT_EQ(ExpPoly().to_string(), "0");
}

TEST(ExpPolyProperty, EvaluationIsARingHomomorphism) {
  gen::Source src(11);
  for (int i = 0; i < 300; ++i) {
    const ExpPoly p = src.exppoly(), q = src.exppoly();
    const auto n = static_cast<unsigned long>(src.integer(1, 100));
    const oracle::Q pn = oracle::eval(p, n), qn = oracle::eval(q, n);
    EXPECT_EQ((p + q).eval_at(n), oracle::Q(pn + qn));
    EXPECT_EQ((p * q).eval_at(n), oracle::Q(pn * qn));
    EXPECT_EQ((-p).eval_at(n), oracle::Q(-pn));
    EXPECT_EQ(p.eval_at(n), pn);
  }
}

TEST(ExpPolyProperty, EventualSignHoldsFromThreshold) {
  gen::Source src(12);
  for (int i = 0; i < 300; ++i) {
    const ExpPoly p = src.exppoly();
    const SignReport r = p.eventual_sign();
    for (unsigned long n = r.threshold; n <= r.threshold + 100; ++n) {
      ASSERT_EQ(oracle::sign_of(oracle::eval(p, n)), r.sign) << p.to_string() << " at n=" << n;
    }
  }
}

TEST(ExpPolyProperty, VanishingOnAWindowMeansZero) {
  // P - Q vanishes on a window past its threshold only when P and Q normalize equal
  gen::Source src(13);
  for (int i = 0; i < 300; ++i) {
    const ExpPoly p = src.exppoly();
    const ExpPoly q = src.coin() ? p + ExpPoly() : src.exppoly();
    const ExpPoly d = p - q;
    const SignReport r = d.eventual_sign();
    bool all_zero = true;
    for (unsigned long n = r.threshold; n <= r.threshold + d.size(); ++n) all_zero = all_zero && oracle::eval(d, n) == 0;
    EXPECT_EQ(all_zero, p == q);
    EXPECT_EQ(all_zero, d.is_zero());
  }
}

TEST(ExpPolyProperty, KeyOrderMatchesGrowth) {
  gen::Source src(14);
  for (int i = 0; i < 300; ++i) {
    ExpTerm a = src.term(), b = src.term();
    a.coeff = 1;
    b.coeff = 1;
    const int c = compare(key_of(a), key_of(b));
    if (c == 0) {
      EXPECT_TRUE(a.base == b.base && a.pow == b.pow);
      continue;
    }
    EXPECT_EQ(compare(key_of(b), key_of(a)), -c);
    const ExpTerm& hi = c > 0 ? a : b;
    const ExpTerm& lo = c > 0 ? b : a;
    const ExpPoly big = ExpPoly::normalize({hi}), small = ExpPoly::normalize({lo});
    const unsigned long n0 = (big - small).eventual_sign().threshold;
    const oracle::Q r0 = oracle::eval(big, n0) / oracle::eval(small, n0);
    const oracle::Q r1 = oracle::eval(big, n0 + 100) / oracle::eval(small, n0 + 100);
    EXPECT_GT(r1, r0) << big.to_string() << " vs " << small.to_string();
  }
}
