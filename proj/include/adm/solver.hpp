#pragma once

// Adomian decomposition for u' = c*u + b*u^eta + f(t), u(0) = u0:
//   u_0     = u0 + int_0^t f
//   u_{n+1} = int_0^t (c*u_n + b*A_n(u_0, ..., u_n))

#include <cstddef>
#include <string>
#include <vector>

#include "adm/adomian.hpp"
#include "adm/error.hpp"
#include "adm/numeric_kernel.hpp"

namespace adm {

struct ODEProblem {
  Rational c;                ///< linear coefficient
  Rational b;                ///< coefficient of the power term
  unsigned eta = 0;          ///< exponent of the power term
  Rational u0;               ///< initial value u(0)
  TimePolynomial forcing;    ///< f(t)
  std::string name;

  friend bool operator==(const ODEProblem&, const ODEProblem&) = default;
};

/// u' = 5u + u^3, u(0) = 1.
inline ODEProblem problem1() { return {Rational(5), Rational(1), 3, Rational(1), {}, "problem1"}; }
/// u' = u + u^4, u(0) = 1.
inline ODEProblem problem2() { return {Rational(1), Rational(1), 4, Rational(1), {}, "problem2"}; }

struct SeriesSolution {
  ODEProblem problem;
  std::vector<TimePolynomial> components;  ///< components[n] is u_n

  std::size_t order() const noexcept { return components.size() - 1; }
};

/// Components u_0 ... u_N in exact arithmetic.
inline SeriesSolution solve(const ODEProblem& problem, std::size_t order) {
  SeriesSolution sol{problem, {}};
  sol.components.reserve(order + 1);
  sol.components.push_back(TimePolynomial::constant(problem.u0) + poly_integrate(problem.forcing));
  for (std::size_t n = 0; n < order; ++n) {
    TimePolynomial rhs = problem.c * sol.components[n];
    if (!problem.b.is_zero()) {
      const AdomianPolynomial a = generate_adomian(problem.eta, n);
      rhs += problem.b * substitute(a, sol.components);
    }
    sol.components.push_back(poly_integrate(rhs));
  }
  return sol;
}

/// u_0 + ... + u_m.
inline TimePolynomial partial_sum(const SeriesSolution& sol, std::size_t m) {
  if (m > sol.order())
    throw range_error("partial sum index " + std::to_string(m) + " exceeds solution order " +
                      std::to_string(sol.order()));
  TimePolynomial sum;
  for (std::size_t k = 0; k <= m; ++k) sum += sol.components[k];
  return sum;
}

inline HPReal evaluate(const SeriesSolution& sol, std::size_t m, const HPReal& t, int digits) {
  return poly_eval_hp(partial_sum(sol, m), t, digits);
}

}  // namespace adm
