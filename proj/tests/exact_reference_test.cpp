#include <gtest/gtest.h>

#include "adm/exact_reference.hpp"

using adm::HPReal;
using adm::ODEProblem;
using adm::Rational;
using adm::TimePolynomial;

namespace {

constexpr int kDigits = 50;

HPReal hp(const char* s) { return HPReal::parse(s, kDigits); }

// root of v on [lo, hi] by bisection, given v(lo) and v(hi) of opposite sign
HPReal bisect_denominator(const adm::ClosedFormSolution& cf, HPReal lo, HPReal hi) {
  const int sign_lo = adm::closed_form_denominator(cf, lo, kDigits).sign();
  for (int i = 0; i < 200; ++i) {
    const HPReal mid = adm::mul_2si(lo + hi, -1);
    if (adm::closed_form_denominator(cf, mid, kDigits).sign() == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

TEST(ClosedForm, PaperProblems) {
  const auto cf1 = adm::closed_form(adm::problem1());
  EXPECT_EQ(cf1.v0, Rational(1));
  EXPECT_EQ(cf1.shift, Rational(1, 5));
  EXPECT_EQ(cf1.decay, Rational(-10));
  // v = (6 e^{-10t} - 1)/5 at t = 0.1
  const HPReal v = adm::closed_form_denominator(cf1, hp("0.1"), kDigits);
  const HPReal expected = (HPReal(6, kDigits) * adm::hp_exp(HPReal(-1, kDigits), kDigits) - HPReal(1, kDigits)) /
                          HPReal(5, kDigits);
  EXPECT_LE(adm::abs(v - expected), hp("1e-48"));

  const auto cf2 = adm::closed_form(adm::problem2());
  EXPECT_EQ(cf2.shift, Rational(1));
  EXPECT_EQ(cf2.decay, Rational(-3));
}

TEST(ClosedForm, LinearEquationIsExponential) {
  const ODEProblem p{Rational(1), Rational(0), 2, Rational(1), {}, "lin"};
  const auto cf = adm::closed_form(p);
  EXPECT_TRUE(cf.shift.is_zero());
  const HPReal u = adm::eval_closed_form(cf, hp("0.7"), kDigits);
  EXPECT_LE(adm::abs(u - adm::hp_exp(hp("0.7"), kDigits)), hp("1e-47"));
  EXPECT_FALSE(adm::blow_up_time(cf, kDigits).has_value());
}

TEST(ClosedForm, Errors) {
  ODEProblem p = adm::problem1();
  p.eta = 1;
  EXPECT_THROW(adm::closed_form(p), adm::unsupported_problem);
  p = adm::problem1();
  p.forcing = TimePolynomial{1};
  EXPECT_THROW(adm::closed_form(p), adm::unsupported_problem);
}

TEST(ClosedForm, ZeroInitialValueIsIdenticallyZero) {
  ODEProblem p = adm::problem1();
  p.u0 = Rational(0);
  const auto cf = adm::closed_form(p);
  EXPECT_TRUE(cf.identically_zero);
  EXPECT_TRUE(adm::eval_closed_form(cf, hp("0.3"), kDigits).is_zero());
  EXPECT_FALSE(adm::blow_up_time(cf, kDigits).has_value());
}

TEST(EvalClosedForm, KnownValues) {
  const auto cf1 = adm::closed_form(adm::problem1());
  const auto cf2 = adm::closed_form(adm::problem2());
  EXPECT_LE(adm::abs(adm::eval_closed_form(cf1, HPReal(0, kDigits), kDigits) - HPReal(1, kDigits)), hp("1e-45"));
  // sqrt(5 / (6 e^{-1} - 1)) and (2 e^{0.3} - 1)^{-1/3}, 40-digit references
  EXPECT_LE(adm::abs(adm::eval_closed_form(cf1, hp("0.10"), kDigits) - hp("2.035080543449185562273906443197225323567")),
            hp("1e-38"));
  EXPECT_LE(adm::abs(adm::eval_closed_form(cf2, hp("-0.10"), kDigits) - hp("0.837930003936994850965401074195101675809")),
            hp("1e-38"));
}

TEST(EvalClosedForm, SingularityPastBlowUp) {
  const auto cf1 = adm::closed_form(adm::problem1());
  try {
    adm::eval_closed_form(cf1, hp("0.2"), kDigits);
    FAIL() << "expected singularity_error";
  } catch (const adm::singularity_error& e) {
    EXPECT_EQ(e.t(), "0.200000000000");
    EXPECT_EQ(e.blow_up_time(), "0.179175946923");
  }
  EXPECT_NO_THROW(adm::eval_closed_form(cf1, hp("0.17"), kDigits));
}

TEST(EvalClosedForm, NegativeInitialValue) {
  // u^3 is odd, so u0 = -1 mirrors problem 1
  ODEProblem p = adm::problem1();
  p.u0 = Rational(-1);
  const HPReal mirrored = adm::eval_closed_form(adm::closed_form(p), hp("0.1"), kDigits);
  const HPReal original = adm::eval_closed_form(adm::closed_form(adm::problem1()), hp("0.1"), kDigits);
  EXPECT_LE(adm::abs(mirrored + original), hp("1e-45"));
  // u' = u + u^2 has the equilibrium u = -1
  const ODEProblem q{Rational(1), Rational(1), 2, Rational(-1), {}, "eq"};
  EXPECT_LE(adm::abs(adm::eval_closed_form(adm::closed_form(q), hp("3"), kDigits) + HPReal(1, kDigits)), hp("1e-45"));
}

TEST(EvalClosedForm, ZeroLinearCoefficientUsesLimitForm) {
  // u' = u^2, u(0) = 1  ->  u = 1/(1 - t), t* = 1
  const ODEProblem p{Rational(0), Rational(1), 2, Rational(1), {}, "riccati"};
  const auto cf = adm::closed_form(p);
  EXPECT_LE(adm::abs(adm::eval_closed_form(cf, hp("0.5"), kDigits) - HPReal(2, kDigits)), hp("1e-45"));
  const auto tb = adm::blow_up_time(cf, kDigits);
  ASSERT_TRUE(tb.has_value());
  EXPECT_EQ(*tb, HPReal(1, kDigits));
  EXPECT_THROW(adm::eval_closed_form(cf, hp("1.5"), kDigits), adm::singularity_error);
}

TEST(EvalClosedForm, SatisfiesOdeByCentralDifferences) {
  const HPReal h = hp("1e-6");
  for (const ODEProblem& p : {adm::problem1(), adm::problem2()}) {
    const auto cf = adm::closed_form(p);
    for (const char* ts : {"-0.1", "-0.05", "0.05", "0.1"}) {
      const HPReal t = hp(ts);
      const HPReal u = adm::eval_closed_form(cf, t, kDigits);
      const HPReal du = (adm::eval_closed_form(cf, t + h, kDigits) - adm::eval_closed_form(cf, t - h, kDigits)) /
                        adm::mul_2si(h, 1);
      HPReal un(1, kDigits);
      for (unsigned i = 0; i < p.eta; ++i) un *= u;
      const HPReal rhs = HPReal(p.c, kDigits) * u + HPReal(p.b, kDigits) * un;
      // central differences err by h^2/6 |u'''|; u''' = f''(u) f^2 + f'(u)^2 f for f(u) = c u + b u^eta
      const HPReal eta(static_cast<long>(p.eta), kDigits);
      HPReal un1(1, kDigits);
      for (unsigned i = 1; i < p.eta; ++i) un1 *= u;
      const HPReal fp = HPReal(p.c, kDigits) + HPReal(p.b, kDigits) * eta * un1;
      const HPReal fpp = HPReal(p.b, kDigits) * eta * (eta - HPReal(1, kDigits)) * un1 / u;
      const HPReal scale = HPReal(1, kDigits) + adm::abs(fpp * rhs * rhs + fp * fp * rhs);
      EXPECT_LE(adm::abs(du - rhs), HPReal(10, kDigits) * h * h * scale) << p.name << " " << ts;
    }
  }
}

TEST(TaylorSeries, Examples) {
  EXPECT_EQ(adm::taylor_series(adm::problem1(), 4), (TimePolynomial{1, 6, 24, 100, 470}));
  EXPECT_EQ(adm::taylor_series(adm::problem2(), 4),
            (TimePolynomial{1, 2, 5, Rational(49, 3), Rational(701, 12)}));
  const ODEProblem lin{Rational(1), Rational(0), 0, Rational(1), {}, "exp"};
  EXPECT_EQ(adm::taylor_series(lin, 3), (TimePolynomial{1, 1, Rational(1, 2), Rational(1, 6)}));
  EXPECT_EQ(adm::taylor_series(adm::problem1(), 0), TimePolynomial{1});
}

TEST(TaylorSeries, TruncationErrorShrinksWithOrder) {
  for (const ODEProblem& p : {adm::problem1(), adm::problem2()}) {
    const auto cf = adm::closed_form(p);
    const auto s5 = adm::taylor_series(p, 5);
    const auto s11 = adm::taylor_series(p, 11);
    for (const char* ts : {"-0.10", "0.10"}) {
      const HPReal t = hp(ts);
      const HPReal exact = adm::eval_closed_form(cf, t, kDigits);
      EXPECT_LT(adm::abs(adm::poly_eval_hp(s11, t, kDigits) - exact), adm::abs(adm::poly_eval_hp(s5, t, kDigits) - exact))
          << p.name << " " << ts;
    }
  }
}

TEST(BlowUpTime, ClosedExpressionMatchesBisection) {
  const auto cf1 = adm::closed_form(adm::problem1());
  const auto cf2 = adm::closed_form(adm::problem2());
  const auto t1 = adm::blow_up_time(cf1, kDigits);
  const auto t2 = adm::blow_up_time(cf2, kDigits);
  ASSERT_TRUE(t1 && t2);
  const HPReal tol = hp("1e-12");
  EXPECT_LE(adm::abs(*t1 - hp("0.1791759469228055000812477358380702272722990692183")), hp("1e-45"));
  EXPECT_LE(adm::abs(*t2 - hp("0.23104906018664843647241070715272552269183337812008")), hp("1e-45"));
  EXPECT_LE(adm::abs(*t1 - bisect_denominator(cf1, HPReal(0, kDigits), HPReal(1, kDigits))), tol);
  EXPECT_LE(adm::abs(*t2 - bisect_denominator(cf2, HPReal(0, kDigits), HPReal(1, kDigits))), tol);
}

TEST(BlowUpTime, AbsentWhenNoPositiveRoot) {
  // u' = -u + u^2 from u0 = 1/2 decays: v = 1 + e^t stays positive
  const ODEProblem decaying{Rational(-1), Rational(1), 2, Rational(1, 2), {}, "decay"};
  EXPECT_FALSE(adm::blow_up_time(adm::closed_form(decaying), kDigits).has_value());
  // blow-up only backwards in time
  const ODEProblem backwards{Rational(0), Rational(-1), 2, Rational(1), {}, "back"};
  EXPECT_FALSE(adm::blow_up_time(adm::closed_form(backwards), kDigits).has_value());
}
