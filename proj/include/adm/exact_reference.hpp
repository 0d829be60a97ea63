#pragma once

// Ground truth for u' = c*u + b*u^eta, u(0) = u0 (eta >= 2, no forcing).
//
// With v = u^(1-eta) the equation becomes linear, v' = (1-eta)(c*v + b), so
//   v(t) = (v0 + b/c) e^{(1-eta) c t} - b/c     (c != 0)
//   v(t) = v0 - (eta-1) b t                     (c == 0)
// and u = sign(u0) |v|^(-1/(eta-1)) while v keeps the sign of v0.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adm/error.hpp"
#include "adm/numeric_kernel.hpp"
#include "adm/solver.hpp"

namespace adm {

struct ClosedFormSolution {
  Rational c;
  Rational b;
  unsigned eta = 2;
  Rational v0;     ///< u0^(1-eta)
  Rational shift;  ///< b/c, zero when c == 0
  Rational decay;  ///< (1-eta)*c
  int u0_sign = 1;
  /// u0 == 0: the solution is identically zero.
  bool identically_zero = false;
};

inline ClosedFormSolution closed_form(const ODEProblem& p) {
  if (p.eta < 2) throw unsupported_problem("closed form needs eta >= 2, got " + std::to_string(p.eta));
  if (!p.forcing.is_zero()) throw unsupported_problem("closed form needs zero forcing");
  ClosedFormSolution cf;
  cf.c = p.c;
  cf.b = p.b;
  cf.eta = p.eta;
  if (p.u0.is_zero()) {
    cf.identically_zero = true;
    return cf;
  }
  cf.u0_sign = p.u0.sign();
  cf.v0 = Rational(1) / pow(p.u0, p.eta - 1);
  cf.shift = p.c.is_zero() ? Rational() : p.b / p.c;
  cf.decay = Rational(1 - static_cast<long long>(p.eta)) * p.c;
  return cf;
}

/// v(t) = u(t)^(1-eta).
inline HPReal closed_form_denominator(const ClosedFormSolution& cf, const HPReal& t, int digits) {
  require_digits(digits);
  const HPReal x = t.with_digits(digits);
  if (cf.c.is_zero())
    return HPReal(cf.v0, digits) - HPReal(Rational(cf.eta - 1) * cf.b, digits) * x;
  const HPReal e = hp_exp(HPReal(cf.decay, digits) * x, digits);
  // v0 e + shift (e - 1) equals v0 exactly at t = 0
  return HPReal(cf.v0, digits) * e + HPReal(cf.shift, digits) * (e - HPReal(1, digits));
}

/// Smallest t > 0 at which v(t) vanishes, if any.
inline std::optional<HPReal> blow_up_time(const ClosedFormSolution& cf, int digits) {
  require_digits(digits);
  if (cf.identically_zero || cf.b.is_zero()) return std::nullopt;
  const Rational k(cf.eta - 1);
  if (cf.c.is_zero()) {
    const Rational t = cf.v0 / (k * cf.b);
    if (t.sign() <= 0) return std::nullopt;
    return HPReal(t, digits);
  }
  const Rational arg = (cf.c * cf.v0 + cf.b) / cf.b;
  if (arg.sign() <= 0) return std::nullopt;
  const HPReal t = hp_log(HPReal(arg, digits)) / HPReal(k * cf.c, digits);
  if (t.sign() <= 0) return std::nullopt;
  return t;
}

inline HPReal eval_closed_form(const ClosedFormSolution& cf, const HPReal& t, int digits) {
  require_digits(digits);
  if (cf.identically_zero) return HPReal(digits);
  const HPReal v = closed_form_denominator(cf, t, digits);
  if (v.sign() != cf.v0.sign()) {
    const auto tb = blow_up_time(cf, digits);
    const std::string ts = t.to_string(12);
    const std::string tbs = tb ? tb->to_string(12) : std::string();
    throw singularity_error(ts, tbs,
                            "closed form is singular at t = " + ts +
                                (tb ? " (blow-up time t* = " + tbs + ")" : std::string(" (branch violation)")));
  }
  const HPReal u = HPReal(1, digits) / hp_root(abs(v), cf.eta - 1);
  return cf.u0_sign < 0 ? -u : u;
}

/// Taylor polynomial of degree N from the coefficient recurrence
///   a_0 = u0,  a_{k+1} = (c a_k + b [(a_0 + ... + a_k t^k)^eta]_k + f_k) / (k+1).
/// Works for every eta >= 0 and polynomial forcing.
inline TimePolynomial taylor_series(const ODEProblem& p, std::size_t order) {
  std::vector<Rational> a{p.u0};
  a.reserve(order + 1);
  for (std::size_t k = 0; k < order; ++k) {
    const TimePolynomial power = poly_pow_trunc(TimePolynomial(a), p.eta, k);
    const Rational next = (p.c * a[k] + p.b * power[k] + p.forcing[k]) / Rational(static_cast<long long>(k + 1));
    a.push_back(next);
  }
  return TimePolynomial(std::move(a));
}

}  // namespace adm
