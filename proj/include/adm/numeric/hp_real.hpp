#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>

#include "adm/error.hpp"
#include "adm/numeric/rational.hpp"

namespace adm {

/// Default working precision in decimal digits.
inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 10;

inline void require_digits(int digits) {
  if (digits < kMinDigits)
    throw argument_error("precision must be at least " + std::to_string(kMinDigits) +
                         " digits, got " + std::to_string(digits));
}

/// Binary precision for `digits` decimal digits plus a few guard bits.
inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

/// Real number carried at a fixed decimal working precision.
///
/// Binary operations produce a result at the larger of the two precisions;
/// every MPFR operation is correctly rounded, so each step has relative error
/// below 10^(1 - digits).
class HPReal {
 public:
  explicit HPReal(int digits = kDefaultDigits) : digits_(digits) {
    mpfr_init2(v_, bits_for_digits(digits_));
    mpfr_set_zero(v_, 1);
  }
  HPReal(long v, int digits) : HPReal(digits) { mpfr_set_si(v_, v, MPFR_RNDN); }
  HPReal(const Rational& q, int digits) : HPReal(digits) {
    mpfr_set_q(v_, q.value().backend().data(), MPFR_RNDN);
  }

  /// Decimal text such as "-0.14" or "1e-3"; rounding happens once.
  static HPReal parse(std::string_view text, int digits) {
    return HPReal(Rational::parse(text), digits);
  }

  HPReal(const HPReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HPReal(HPReal&& o) noexcept : HPReal(o.digits_, no_init{}) { mpfr_swap(v_, o.v_); }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) {
      if (v_[0]._mpfr_d == nullptr)
        mpfr_init2(v_, mpfr_get_prec(o.v_));
      else
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      digits_ = o.digits_;
    }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(digits_, o.digits_);
    return *this;
  }
  ~HPReal() {
    if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  }

  int digits() const noexcept { return digits_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  /// Same value rounded to a new working precision.
  HPReal with_digits(int digits) const {
    HPReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  HPReal operator-() const {
    HPReal r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend HPReal operator+(const HPReal& a, const HPReal& b) { return binary(a, b, mpfr_add); }
  friend HPReal operator-(const HPReal& a, const HPReal& b) { return binary(a, b, mpfr_sub); }
  friend HPReal operator*(const HPReal& a, const HPReal& b) { return binary(a, b, mpfr_mul); }
  friend HPReal operator/(const HPReal& a, const HPReal& b) {
    if (b.is_zero()) throw division_by_zero();
    return binary(a, b, mpfr_div);
  }
  HPReal& operator+=(const HPReal& o) { return *this = *this + o; }
  HPReal& operator-=(const HPReal& o) { return *this = *this - o; }
  HPReal& operator*=(const HPReal& o) { return *this = *this * o; }
  HPReal& operator/=(const HPReal& o) { return *this = *this / o; }

  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const HPReal& a, const HPReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  /// Decimal text with exactly `significant` significant digits, "0" for zero.
  ///
  /// Positional notation for decimal exponents in [-6, significant), otherwise
  /// d.ddd...e[+-]XX. Never depends on the C locale.
  std::string to_string(int significant) const;
  std::string to_string() const { return to_string(digits_); }

 private:
  struct no_init {};
  HPReal(int digits, no_init) : digits_(digits) { v_[0]._mpfr_d = nullptr; }

  template <typename Op>
  static HPReal binary(const HPReal& a, const HPReal& b, Op op) {
    const HPReal& wider = a.digits_ >= b.digits_ ? a : b;
    HPReal r(wider.digits_);
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  int digits_;
  mpfr_t v_;
};

inline HPReal abs(const HPReal& x) { return x.sign() < 0 ? -x : x; }

inline HPReal mul_2si(const HPReal& x, long e) {
  HPReal r(x.digits());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

/// Natural logarithm (MPFR, correctly rounded). Requires x > 0.
inline HPReal hp_log(const HPReal& x) {
  if (x.sign() <= 0) throw argument_error("logarithm of a non-positive number");
  HPReal r(x.digits());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

/// Real k-th root x^(1/k) for x >= 0 (and for x < 0 when k is odd).
inline HPReal hp_root(const HPReal& x, unsigned long k) {
  if (k == 0) throw argument_error("zeroth root");
  if (x.sign() < 0 && k % 2 == 0) throw argument_error("even root of a negative number");
  HPReal r(x.digits());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

inline std::string HPReal::to_string(int significant) const {
  if (significant < 1) throw argument_error("significant digits must be positive");
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(significant), v_, MPFR_RNDN),
      mpfr_free_str);
  std::string mant(raw.get());
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp10, so the leading digit has decimal exponent exp10 - 1
  const long lead = static_cast<long>(exp10) - 1;
  if (lead >= -6 && lead < significant) {
    if (lead < 0) {
      out += "0.";
      out.append(static_cast<std::size_t>(-lead - 1), '0');
      out += mant;
    } else {
      out.append(mant, 0, static_cast<std::size_t>(lead + 1));
      if (static_cast<long>(mant.size()) > lead + 1) {
        out.push_back('.');
        out.append(mant, static_cast<std::size_t>(lead + 1));
      }
    }
  } else {
    out.push_back(mant.front());
    if (mant.size() > 1) {
      out.push_back('.');
      out.append(mant, 1);
    }
    out.push_back('e');
    out.push_back(lead < 0 ? '-' : '+');
    const std::string e = std::to_string(std::labs(lead));
    if (e.size() < 2) out.push_back('0');
    out += e;
  }
  return out;
}

/// e^x at `digits` decimal digits.
///
/// Halves the argument s times until |r| < 2^-16, sums the Taylor series of
/// e^r until terms drop below the working epsilon, then squares s times.
/// Guard digits cover the error growth of the squaring chain.
inline HPReal hp_exp(const HPReal& x, int digits) {
  require_digits(digits);
  if (x.is_zero()) return HPReal(1, digits);

  long scale = 16;
  if (const long e = mpfr_get_exp(x.get()); e > 0) scale += e;
  if (scale > 4096) throw argument_error("hp_exp argument out of range");
  const int guard = 10 + static_cast<int>(scale * 0.30103) + 1;
  const int work = digits + guard;

  const HPReal r = mul_2si(x.with_digits(work), -scale);
  HPReal sum(1, work);
  HPReal term(1, work);
  const mpfr_exp_t floor_exp = -static_cast<mpfr_exp_t>(bits_for_digits(work)) - 2;
  for (long k = 1; k < 100000; ++k) {
    term = term * r / HPReal(k, work);
    if (term.is_zero() || mpfr_get_exp(term.get()) < floor_exp) break;
    sum += term;
  }
  for (long i = 0; i < scale; ++i) sum = sum * sum;
  return sum.with_digits(digits);
}

}  // namespace adm
