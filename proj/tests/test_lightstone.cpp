#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hyperdec;

namespace {

HyperReal ten_minus(const Rank& r) { return inverse_power10(r); }
HyperReal one_minus() { return HyperReal(1) - ten_minus(Rank::parse("H")); }

int brute_digit(const HyperReal& x, const Rank& k, unsigned long n) {
  const oracle::Q scaled = oracle::ten_to(k.at(n)) * *oracle::eval(x, n);
  oracle::Z r = oracle::floor_of(scaled) % 10;
  if (r < 0) r += 10;
  return static_cast<int>(r.get_si());
}

RenderSpec window_at_h(unsigned long halfwidth) {
  RenderSpec s;
  s.rank_windows = {{Rank::parse("H"), halfwidth}};
  return s;
}

}  // namespace

TEST(AtomForm, Examples) {
  const DecimalAtomForm a = to_atom_form(one_minus());
  EXPECT_EQ(a.base_value, 1);
  ASSERT_EQ(a.corrections.size(), 1u);
  EXPECT_EQ(a.corrections[0].coeff, -1);
  EXPECT_EQ(a.corrections[0].rank.to_string(), "H");

  const DecimalAtomForm b = to_atom_form(one_minus() / HyperReal(3));
  EXPECT_EQ(b.base_value, Rational(1, 3));
  ASSERT_EQ(b.corrections.size(), 1u);
  EXPECT_EQ(b.corrections[0].coeff, Rational(-1, 3));
  EXPECT_EQ(*oracle::eval(one_minus() / HyperReal(3), 2), oracle::Q(33, 100));
  EXPECT_EQ(b.value(), one_minus() / HyperReal(3));

  try {
    to_atom_form(H());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInAtomForm);
  }
  EXPECT_FALSE(try_atom_form(HyperReal(1) / H()).has_value());
  EXPECT_FALSE(try_atom_form(HyperReal::geometric(Rational(1, 2))).has_value());
  EXPECT_TRUE(try_atom_form(HyperReal(Rational(2, 7))).has_value());
}

TEST(DigitAt, Examples) {
  const DecimalAtomForm a = to_atom_form(one_minus());
  EXPECT_EQ(digit_at(a, Rank::parse("H")).symbol(), '9');
  EXPECT_EQ(digit_at(a, Rank::parse("H+1")).symbol(), '0');
  for (unsigned long n = 1; n <= 10; ++n) EXPECT_EQ(brute_digit(one_minus(), Rank::parse("H+1"), n), 0);
  const DecimalAtomForm b = to_atom_form(HyperReal(1) - HyperReal(2) * ten_minus(Rank::parse("H")));
  EXPECT_EQ(digit_at(b, Rank::parse("H")).symbol(), '8');
  EXPECT_TRUE(digit_at(b, Rank::parse("H")).certified);
}

TEST(DigitAt, UltrafilterDependentDigit) {
  // 1/11 = 0.0909...: the digit at rank H follows the parity of H
  const DigitAnswer a = digit_at(to_atom_form(HyperReal(Rational(1, 11))), Rank::parse("H"));
  EXPECT_FALSE(a.is_digit());
  EXPECT_EQ(a.symbol(), '?');
  EXPECT_EQ(a.cycle.size(), 2u);
  const DigitAnswer b = digit_at(to_atom_form(HyperReal(Rational(1, 11))), Rank::parse("2H"));
  EXPECT_TRUE(b.is_digit());
  EXPECT_EQ(b.digit, 9);
}

TEST(DigitAt, RejectsNegativeValues) {
  try {
    digit_at(to_atom_form(HyperReal(-1) + ten_minus(Rank::parse("H"))), Rank::parse("H"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonnegativityViolation);
  }
}

TEST(DigitFinite, Examples) {
  EXPECT_EQ(digit_finite(one_minus(), 3), 9);
  EXPECT_EQ(digit_finite(HyperReal(Rational(1, 2)) + HyperReal(1) / H(), 1), 5);
  EXPECT_EQ(digit_finite(one_minus() / HyperReal(3), 4), 3);
  EXPECT_EQ(digit_finite(HyperReal(Rational(1, 8)), 3), 5);
}

TEST(Render, GoldenStrings) {
  EXPECT_EQ(render(one_minus(), window_at_h(1)), "0.999...;...99[@H]0...");
  EXPECT_EQ(render(one_minus() / HyperReal(3), window_at_h(1)), "0.333...;...33[@H]0...");
  EXPECT_EQ(render(HyperReal(1), RenderSpec{}), "1.000...;");
  EXPECT_EQ(render(HyperReal(1) - HyperReal(2) * ten_minus(Rank::parse("H")), window_at_h(1)),
            "0.999...;...98[@H]0...");
}

TEST(Render, SeveralWindowsAndRepeat9) {
  RenderSpec s;
  s.rank_windows = {{Rank::parse("H"), 0}, {Rank::parse("2H"), 1}};
  const HyperReal x = one_minus() + ten_minus(Rank::parse("2H"));
  EXPECT_EQ(render(x, s), "0.999...;...9[@H]...01[@2H]0...");
  RenderSpec nines = window_at_h(1);
  nines.repeat9 = true;
  EXPECT_EQ(render(HyperReal(1), nines), "0.999...;...99[@H]9...");
  EXPECT_EQ(render(HyperReal(Rational(1, 4)), nines), "0.249...;...99[@H]9...");
  RenderSpec plain;
  plain.finite_window = 5;
  EXPECT_EQ(render(HyperReal(Rational(-1, 4)), plain), "-0.25000...;");
  EXPECT_EQ(render(HyperReal(Rational(1, 11)), window_at_h(0)), "0.090...;...?[@H]...");
}

TEST(Render, NeedsLimitedAtomForms) {
  EXPECT_THROW(render(H(), RenderSpec{}), Error);
  try {
    render(HyperReal(1) / H(), window_at_h(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInAtomForm);
  }
  EXPECT_EQ(render(HyperReal(1) / H(), RenderSpec{}), "0.000...;");
}

TEST(LightstoneProperty, CertifiedDigitsAgreeWithBruteForce) {
  gen::Source src(51);
  int digits = 0, undecided = 0;
  for (int i = 0; i < 300; ++i) {
    HyperReal x(Rational(src.integer(0, 30), src.integer(1, 12)));
    const long count = src.integer(1, 2);
    for (long j = 0; j < count; ++j) {
      x += HyperReal(src.nonzero_rational(9, 12)) * ten_minus(Rank::infinite(src.integer(1, 2), src.integer(-1, 2)));
    }
    if (x < HyperReal()) x = -x;
    const DecimalAtomForm form = to_atom_form(x);
    const Rank k = Rank::infinite(src.integer(1, 3), src.integer(-2, 3));
    const DigitAnswer a = digit_at(form, k);
    if (a.is_digit()) {
      ++digits;
      for (unsigned long n = a.probe_start; n < a.probe_start + 50; ++n) {
        ASSERT_EQ(brute_digit(x, k, n), a.digit) << x.to_string() << " at " << k.to_string() << ", n=" << n;
      }
    } else {
      ++undecided;
      for (unsigned long n = a.probe_start; n < a.probe_start + 50; ++n) {
        ASSERT_EQ(brute_digit(x, k, n), a.cycle[(n - a.probe_start) % a.cycle.size()]) << x.to_string();
      }
    }
  }
  EXPECT_GT(digits, 100);
  EXPECT_GT(undecided, 5);
}

TEST(LightstoneProperty, ReconstructionOfOneMinusTenToMinusH) {
  const HyperReal x = one_minus();
  for (long m = 1; m <= 10; ++m) {
    HyperReal head;
    for (long k = 1; k <= m; ++k) head += HyperReal(Rational(digit_finite(x, k)) * pow10(-k));
    const HyperReal tail = HyperReal(pow10(-m)) - ten_minus(Rank::parse("H"));
    EXPECT_EQ(head + tail, x) << m;
  }
}

TEST(LightstoneProperty, TerminatingTailDigitsAreZero) {
  gen::Source src(52);
  for (int i = 0; i < 200; ++i) {
    // terminating base value plus integer multiples of 10^-H
    HyperReal x(Rational(src.integer(0, 99), src.pick(std::vector<long>{1, 2, 5, 10})));
    x += HyperReal(src.integer(-9, 9)) * ten_minus(Rank::parse("H"));
    if (x < HyperReal()) x = -x;
    const DecimalAtomForm form = to_atom_form(x);
    for (const char* r : {"H+1", "H+2", "2H"}) {
      const DigitAnswer a = digit_at(form, Rank::parse(r));
      ASSERT_TRUE(a.is_digit()) << x.to_string() << " at " << r;
      EXPECT_EQ(a.digit, 0) << x.to_string() << " at " << r;
    }
  }
}

TEST(LightstoneProperty, FiniteDigitsFollowTheStandardPart) {
  gen::Source src(53);
  for (int i = 0; i < 200; ++i) {
    const HyperReal x = abs(src.limited());
    const Rational c = st(x);
    const bool boundary = x < HyperReal(c) && detail::terminating_length(c).has_value();
    for (long k = 1; k <= 8; ++k) {
      if (!boundary) {
        EXPECT_EQ(digit_finite(x, k), oracle::digit(c, k)) << x.to_string() << " k=" << k;
      }
    }
  }
  // the boundary case: st = 1 has digits 0, the value itself has 9s
  for (long k = 1; k <= 8; ++k) {
    EXPECT_EQ(oracle::digit(st(one_minus()), k), 0);
    EXPECT_EQ(digit_finite(one_minus(), k), 9);
  }
}
