#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adm/numeric/hp_real.hpp"
#include "adm/numeric/rational.hpp"

namespace adm {

/// Dense univariate polynomial in t with exact rational coefficients.
///
/// coefficients()[k] is the coefficient of t^k. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients and equality is
/// plain coefficient-vector equality.
class TimePolynomial {
 public:
  TimePolynomial() = default;
  TimePolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
  TimePolynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

  static TimePolynomial constant(const Rational& v) { return TimePolynomial({v}); }
  static TimePolynomial monomial(const Rational& coeff, std::size_t degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return TimePolynomial(std::move(c));
  }

  std::span<const Rational> coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of t^k (zero beyond the degree).
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

  friend bool operator==(const TimePolynomial&, const TimePolynomial&) = default;

  friend TimePolynomial operator+(const TimePolynomial& p, const TimePolynomial& q);
  friend TimePolynomial operator-(const TimePolynomial& p, const TimePolynomial& q);
  friend TimePolynomial operator*(const TimePolynomial& p, const TimePolynomial& q);
  friend TimePolynomial operator*(const Rational& s, const TimePolynomial& p);
  TimePolynomial& operator+=(const TimePolynomial& o) { return *this = *this + o; }

  /// Human-readable form, e.g. "1 + 6*t + 35588/3*t^6"; "0" when zero.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const TimePolynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline TimePolynomial operator+(const TimePolynomial& p, const TimePolynomial& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t k = 0; k < p.c_.size(); ++k) c[k] += p.c_[k];
  for (std::size_t k = 0; k < q.c_.size(); ++k) c[k] += q.c_[k];
  return TimePolynomial(std::move(c));
}

inline TimePolynomial operator*(const Rational& s, const TimePolynomial& p) {
  if (s.is_zero()) return {};
  std::vector<Rational> c(p.c_);
  for (auto& x : c) x *= s;
  return TimePolynomial(std::move(c));
}

inline TimePolynomial operator-(const TimePolynomial& p, const TimePolynomial& q) {
  return p + Rational(-1) * q;
}

namespace detail {

// Convolution truncated at degree `limit` (inclusive).
inline std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b,
                                      std::size_t limit) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = std::min(a.size() + b.size() - 1, limit + 1);
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

}  // namespace detail

inline TimePolynomial operator*(const TimePolynomial& p, const TimePolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return TimePolynomial(detail::convolve(p.c_, q.c_, p.c_.size() + q.c_.size()));
}

inline TimePolynomial poly_add(const TimePolynomial& p, const TimePolynomial& q) { return p + q; }
inline TimePolynomial poly_mul(const TimePolynomial& p, const TimePolynomial& q) { return p * q; }

/// Drops every coefficient of degree greater than `max_degree`.
inline TimePolynomial truncate(const TimePolynomial& p, std::size_t max_degree) {
  const auto c = p.coefficients();
  return TimePolynomial(std::vector<Rational>(c.begin(), c.begin() + std::min(c.size(), max_degree + 1)));
}

/// p^eta with degrees above `max_degree` discarded after every multiplication.
inline TimePolynomial poly_pow_trunc(const TimePolynomial& p, unsigned eta, std::size_t max_degree) {
  TimePolynomial result = TimePolynomial::constant(1);
  const TimePolynomial base = truncate(p, max_degree);
  for (unsigned i = 0; i < eta; ++i)
    result = TimePolynomial(detail::convolve(result.coefficients(), base.coefficients(), max_degree));
  return result;
}

/// Antiderivative vanishing at t = 0.
inline TimePolynomial poly_integrate(const TimePolynomial& p) {
  if (p.is_zero()) return {};
  const auto c = p.coefficients();
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k)
    out[k + 1] = c[k] / Rational(static_cast<long long>(k + 1));
  return TimePolynomial(std::move(out));
}

inline TimePolynomial poly_differentiate(const TimePolynomial& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * Rational(static_cast<long long>(k));
  return TimePolynomial(std::move(out));
}

/// Exact value at a rational point.
inline Rational poly_eval(const TimePolynomial& p, const Rational& t) {
  Rational acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// Horner evaluation at `digits` decimal digits.
inline HPReal poly_eval_hp(const TimePolynomial& p, const HPReal& t, int digits) {
  require_digits(digits);
  const HPReal x = t.with_digits(digits);
  HPReal acc(digits);
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + HPReal(*it, digits);
  return acc;
}

inline std::string TimePolynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    const Rational mag = abs(a);
    if (out.empty())
      out += a.sign() < 0 ? "-" : "";
    else
      out += a.sign() < 0 ? " - " : " + ";
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace adm
