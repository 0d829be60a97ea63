#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "adm/error.hpp"

namespace adm {

/// Arbitrary-precision integer (GMP backed, expression templates off).
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Zero is always 0/1. Constructing with a zero denominator or dividing by
/// zero throws adm::division_by_zero.
class Rational {
 public:
  using value_type = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                   boost::multiprecision::et_off>;

  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT: implicit from integer literals
  Rational(const Integer& v) : v_(v) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw division_by_zero();
    v_ = value_type(num, den);
  }
  Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p", "-p", "p/q" or a finite decimal such as "-0.125" / "1e-3".
  static Rational parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }
  const value_type& value() const noexcept { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool is_integer() const { return denominator() == 1; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.str(); }

  Rational operator-() const { return from_value(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_value(value_type v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  value_type v_{0};
};

/// Integer power with a non-negative exponent; pow(x, 0) == 1.
inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw argument_error("malformed integer '" + std::string(s) + "'");
  // boost reads a leading 0 as octal
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

inline Integer pow10(unsigned e) {
  Integer r(1);
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw argument_error("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = detail::parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text))
      throw argument_error("malformed rational '" + original + "'");
    return Rational(num, detail::parse_integer(den_text));
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const Integer exp_value = detail::parse_integer(text.substr(e + 1));
    if (abs(exp_value) > 100000) throw argument_error("exponent too large in '" + original + "'");
    exponent = exp_value.convert_to<long long>();
    text = text.substr(0, e);
  }

  std::string digits;
  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !detail::all_digits(int_part)) ||
      (!frac_part.empty() && !detail::all_digits(frac_part)))
    throw argument_error("malformed number '" + original + "'");
  digits.append(int_part).append(frac_part);

  Integer mantissa = detail::parse_integer(digits);
  if (negative) mantissa = -mantissa;
  exponent -= static_cast<long long>(frac_part.size());
  if (exponent >= 0) return Rational(mantissa * detail::pow10(static_cast<unsigned>(exponent)));
  return Rational(mantissa, detail::pow10(static_cast<unsigned>(-exponent)));
}

}  // namespace adm
